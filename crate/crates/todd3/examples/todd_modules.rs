//! Quotient maps from the code onto the Todd modules A10 and A11.
use todd3::mathieu::{self, Shape};

fn main() {
    for shape in [Shape::A10, Shape::A11] {
        let r = mathieu::quotient_equivariance(shape);
        println!(
            "{shape:?}: image {} kernel {} equivariant {}",
            r.image_size,
            r.kernel.len(),
            r.equivariant
        );
    }
    let p = mathieu::dual_pairing_check();
    println!("A11 x A11*: Gram rank {}, invariant {}", p.gram_rank, p.adjoint);
}
