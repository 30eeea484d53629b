//! Stabilizers of the weight-12 words θ*: 2M11, 2M10 and their cores.
use todd3::group::FiniteGroup;
use todd3::{mathieu, monomial};

fn main() {
    let d = mathieu::mathieu();
    let g = &monomial::m12().group;
    for (name, h) in [("2M11", &d.m2_11), ("2M10", &d.m2_10), ("M0_11", &d.m0_11), ("M0_10", &d.m0_10)] {
        println!("{name:<6} {:>6}", h.order());
    }
    println!("2M10/M0_10 has order {}", d.m2_10.quotient(g, &d.m0_10).order());
    for (gen, row) in mathieu::acttheta_table() {
        println!("{gen:?}: {row:?}");
    }
}
