//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Runs with its own `main` so the lines show up in plain `cargo test` output.
//! A criterion listed in `KNOWN_FAILURES` is reported but does not fail the run.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use todd3::cli::{self, Status};
use todd3::gf::F3;
use todd3::golay;
use todd3::pgroups::{self, Case};

/// Criterion 14 expects an image of order 96 for q = 3; the group it names,
/// GL2(3), has order 48, which is what the computation finds.
const KNOWN_FAILURES: &[usize] = &[14];

struct Line {
    n: usize,
    title: &'static str,
    budget: Duration,
    failures: Vec<String>,
    elapsed: Duration,
}

fn claims(ids: &[&str], failures: &mut Vec<String>) -> Vec<cli::ClaimResult> {
    let mut out = Vec::new();
    for id in ids {
        let c = cli::list_claims().iter().find(|c| c.id == *id).expect("registered claim");
        let r = cli::run_claim(c, cli::DEFAULT_SEED);
        if r.status != Status::Pass {
            failures.push(format!("{id}: computed {} expected {}", r.computed, r.expected));
        }
        out.push(r);
    }
    out
}

fn check(failures: &mut Vec<String>, what: &str, ok: bool) {
    if !ok {
        failures.push(what.to_string());
    }
}

fn criterion(n: usize, title: &'static str, budget_s: u64, body: impl FnOnce(&mut Vec<String>)) -> Line {
    let start = Instant::now();
    let mut failures = Vec::new();
    body(&mut failures);
    Line { n, title, budget: Duration::from_secs(budget_s), failures, elapsed: start.elapsed() }
}

/// Weight distribution by running over all 3⁶ combinations of the basis.
fn weight_distribution_oracle() -> Vec<(usize, usize)> {
    let basis = golay::golay().code.basis();
    let mut counts = [0usize; 13];
    for k in 0..729usize {
        let mut w = [F3::ZERO; 12];
        let mut m = k;
        for b in basis {
            let c = F3::new((m % 3) as i64);
            m /= 3;
            for (x, y) in w.iter_mut().zip(b.iter()) {
                *x = *x + c * *y;
            }
        }
        counts[w.iter().filter(|x| !x.is_zero()).count()] += 1;
    }
    counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(k, &c)| (k, c)).collect()
}

fn gl2_order(q: usize) -> usize {
    (q * q - 1) * (q * q - q)
}

fn main() -> ExitCode {
    let mut lines = Vec::new();

    lines.push(criterion(1, "Golay code: dimensions, self-duality, weights, 12 pairs", 1, |f| {
        claims(&["golay.dims", "golay.weights", "golay.pairs"], f);
        check(f, "weight oracle", weight_distribution_oracle() == vec![(0, 1), (6, 264), (9, 440), (12, 24)]);
    }));

    lines.push(criterion(2, "graph relation for all 81 tetracode pairs", 1, |f| {
        claims(&["golay.relation"], f);
    }));

    lines.push(criterion(3, "Φ/Θ isomorphism and the conjugation identity", 5, |f| {
        let r = claims(&["golay.phi", "golay.theta"], f);
        // |AGL2(3)| = 9 · |GL2(3)|
        check(f, "Θ image is AGL2(3)", r[1].computed["image"] == 9 * gl2_order(3));
    }));

    lines.push(criterion(4, "2M12 of order 190080, N maximal of index 220", 60, |f| {
        let r = claims(&["m12.order", "m12.normalizer"], f);
        // |M12| = 2⁶·3³·5·11, doubled
        check(f, "order formula", r[0].computed["order"] == 2 * 64 * 27 * 5 * 11);
    }));

    lines.push(criterion(5, "two classes of order 3, Jordan 3+2+1 and 3+3", 30, |f| {
        claims(&["m12.classes"], f);
    }));

    lines.push(criterion(6, "orbits 12, 132, 220 on P(𝒢)", 30, |f| {
        let r = claims(&["m12.orbits"], f);
        // (3⁶ − 1)/2 projective points
        let total: u64 = r[0].computed.as_array().map_or(0, |a| a.iter().filter_map(|v| v.as_u64()).sum());
        check(f, "orbits partition P(𝒢)", total == 364);
    }));

    lines.push(criterion(7, "2M11, 2M10, M0_11, M0_10 and the θ* action table", 60, |f| {
        claims(&["mathieu.stabilizers", "mathieu.acttheta"], f);
    }));

    lines.push(criterion(8, "Todd quotients, kernels, equivariance, dual pairing", 10, |f| {
        claims(&["todd.quotients", "todd.pairing"], f);
    }));

    lines.push(criterion(9, "p-group suite: Z(S), [S,S], commutator table, Jordan types, cubes", 30, |f| {
        claims(&["pgroups.structure", "pgroups.g0a", "pgroups.cubes"], f);
        for case in Case::TODD {
            let r = pgroups::s_report(case);
            check(f, "[S,S] = A_* in the Todd cases", r.derived_is_a_star);
            let expected = if case == Case::A6 { vec![3, 1] } else { vec![3, 2] };
            let j = pgroups::table_g0a_check(case).jordan;
            check(f, "Jordan type of c_s", !j.is_empty() && j.iter().all(|p| *p == expected));
        }
        // In the M12 case A_* = [T,A] is properly contained in [S,S] = A_*[T,T].
        let r = pgroups::s_report(Case::M12);
        check(f, "[S,S] in the M12 case", r.derived_is_a_star_times_tt && r.derived_order == r.a_star_order * 3);
    }));

    lines.push(criterion(10, "unique special Q per case, Out_S(Q), triple multiplication", 30, |f| {
        claims(&["pgroups.special_q", "pgroups.qtriples"], f);
    }));

    lines.push(criterion(11, "M12-case census, N_Γ(Z), invariant subspaces, N_M(Q)/Q", 60, |f| {
        let r = claims(&["pgroups.uwq", "pgroups.abelian", "pgroups.extraspecial", "pgroups.gamma"], f);
        // (E9 ⋊ GL2(3)) × C2
        check(f, "|N_Γ(Z)| formula", r[3].computed["n_gamma_z"] == 9 * gl2_order(3) * 2);
    }));

    lines.push(criterion(12, "α1, α2, α3 automorphisms, cocycles, commuting with β", 5, |f| {
        claims(&["pgroups.alpha"], f);
    }));

    lines.push(criterion(13, "Sp4(3): classes, counts, Lagrangians, subgroups of type 3c/3d", 90, |f| {
        let r = claims(&["sp4.order", "sp4.classes", "sp4.counts", "sp4.subgroups"], f);
        // |Sp4(3)| = 3⁴(3² − 1)(3⁴ − 1); Lagrangians (3+1)(3²+1)
        check(f, "Sp4 order formula", r[0].computed[0] == 81 * 8 * 80);
        check(f, "Lagrangian count formula", r[2].computed["lagrangians"] == 4 * 10);
    }));

    lines.push(criterion(14, "UT3(3), UT3(9): kernel ranks, image orders 96 and 11520, unique lifts", 30, |f| {
        let r = claims(&["ut3.aut3", "ut3.aut9"], f);
        // ΓL2(9) = GL2(9) ⋊ Gal(F9/F3)
        check(f, "|ΓL2(9)| formula", r[1].computed["image_order"] == gl2_order(9) * 2);
    }));

    lines.push(criterion(15, "strongly 3-embedded verdicts, index invariance, GL4(3) Jordan types", 60, |f| {
        claims(&["emb.sl29", "emb.m11", "emb.negative", "emb.invariance", "emb.gl4"], f);
    }));

    let mut unexpected = BTreeSet::new();
    for l in &lines {
        let over = l.elapsed > l.budget;
        let pass = l.failures.is_empty() && !over;
        println!(
            "{} criterion {:>2}: {} ({:.2} s, budget {} s)",
            if pass { "PASS" } else { "FAIL" },
            l.n,
            l.title,
            l.elapsed.as_secs_f64(),
            l.budget.as_secs()
        );
        for m in &l.failures {
            println!("      {m}");
        }
        if over {
            println!("      over time budget");
        }
        if pass == KNOWN_FAILURES.contains(&l.n) {
            unexpected.insert(l.n);
        }
    }
    let passed = lines.iter().filter(|l| l.failures.is_empty() && l.elapsed <= l.budget).count();
    println!("acceptance: {passed}/{} criteria pass", lines.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
