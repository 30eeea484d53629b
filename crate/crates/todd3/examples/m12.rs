//! Complete the monomial normalizer N to 2M12 and look at its order-3 classes
//! and its orbits on the projective points of the code.
use todd3::monomial;

fn main() {
    let m = monomial::m12();
    println!("|2M12| = {}", m.group.len());
    println!("|N| = {}, index {}", m.n.order(), m.group.len() / m.n.order());
    for c in monomial::order3_class_data(m) {
        println!("class of size {:>6}: Jordan {:?}, fixed rank {}", c.size, c.partition, c.fixed_rank);
    }
    println!("orbits on P(G): {:?}", monomial::orbit_lengths_on_projective(m.group.generators()));
}
