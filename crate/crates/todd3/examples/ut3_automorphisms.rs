//! Automorphisms of UT3(3) and UT3(9) acting on Q/Z.
use todd3::sp4ut3;

fn main() -> Result<(), todd3::Error> {
    for q in [3, 9] {
        let r = sp4ut3::ut3_aut_suite(q, 100, 1)?;
        println!(
            "q = {q}: kernel {} (rank {}), image {}, unique commuting lifts {}/{}",
            r.kernel_order, r.kernel_rank, r.image_order, r.unique_commuting_lifts, r.samples
        );
    }
    Ok(())
}
