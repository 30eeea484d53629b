//! Build the ternary Golay code from the tetracode and print its weight
//! enumerator and a few Φ-images in Sym3(F3).
use todd3::golay;

fn main() {
    let g = golay::golay();
    let w = g.code.weight_enumerator();
    for (k, n) in w.iter().enumerate().filter(|(_, &n)| n > 0) {
        println!("weight {k:>2}: {n}");
    }
    let phi = golay::phi();
    for v in g.code.basis() {
        println!("{}  ->  {:?}", golay::render(v), phi.apply(v).0);
    }
}
