//! Order-3 classes of Sp4(3) with the sign and determinant labels.
use todd3::sp4ut3;

fn main() -> Result<(), todd3::Error> {
    let c = sp4ut3::class_and_subgroup_counts()?;
    for (label, size) in &c.class_sizes {
        println!("{label}: {size}");
    }
    println!("subgroups by type: {:?}", c.subgroup_orbits);
    println!("Lagrangians: {}", c.lagrangians);
    let r = sp4ut3::construct_2a4_2a5_q8q8_2a6(1)?;
    for s in [&r.two_a4[0], &r.two_a4[1], &r.two_a5[0], &r.two_a5[1], &r.sl2_9, &r.two_1_4_a5] {
        let types: Vec<String> = s.types.iter().map(|t| t.to_string()).collect();
        println!("{:<24} order {:>5}  types {}", s.name, s.order, types.join(","));
    }
    Ok(())
}
