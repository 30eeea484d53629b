//! Strongly 3-embedded subgroups via the Sylow intersection graph.
use todd3::strongemb;

fn main() -> Result<(), todd3::Error> {
    for v in strongemb::standard_verdicts(true)? {
        println!("{:<18} |G| = {:>6}  Sylows {:>4}  embedded {}", v.name, v.order, v.sylow_count, v.verdict);
    }
    let r = strongemb::gl4_jordan_suite()?;
    println!("SL2(9) on F3^4: {:?}; Ω4^-(3) core {}: {:?}", r.sl2_9_types, r.core_order, r.core_types);
    Ok(())
}
