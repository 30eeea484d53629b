//! Claim registry and batch runner behind the `verify` binary.
//!
//! Each claim has a dot-namespaced id, a short description of the statement it
//! checks, and a checker returning the computed and expected values as JSON.
//! A claim passes when the two are equal.

use std::collections::BTreeSet;
use std::time::Instant;

use regex::Regex;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::gf::F3;
use crate::golay;
use crate::group::{FiniteGroup, Subgroup};
use crate::mathieu::{self, Shape};
use crate::monomial;
use crate::pgroups::{self, Case, Slope};
use crate::sp4ut3::{self, ClassLabel};
use crate::strongemb;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub computed: Value,
    pub expected: Value,
}

impl Outcome {
    pub fn new(computed: Value, expected: Value) -> Outcome {
        Outcome { computed, expected }
    }

    pub fn pass(&self) -> bool {
        self.computed == self.expected
    }
}

pub type Checker = fn(u64) -> Result<Outcome, Error>;

pub struct Claim {
    pub id: &'static str,
    pub paper_ref: &'static str,
    pub checker: Checker,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub results: Vec<ClaimResult>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    /// Same report with runtimes zeroed, for comparing runs.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.results {
            c.runtime_ms = 0;
        }
        r
    }

    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.results.iter().find(|c| c.id == id)
    }
}

pub const DEFAULT_SEED: u64 = 20240611;

pub fn list_claims() -> &'static [Claim] {
    CLAIMS
}

/// Translate a shell-style glob (`*`, `?`) into an anchored regex.
pub fn glob_regex(pattern: &str) -> Regex {
    let mut re = String::from("^");
    for c in pattern.chars() {
        match c {
            '*' => re.push_str(".*"),
            '?' => re.push('.'),
            c => re.push_str(&regex::escape(&c.to_string())),
        }
    }
    re.push('$');
    Regex::new(&re).expect("escaped glob is a valid regex")
}

pub fn select(pattern: Option<&str>) -> Result<Vec<&'static Claim>, Error> {
    let Some(p) = pattern else {
        return Ok(CLAIMS.iter().collect());
    };
    let re = glob_regex(p);
    let hits: Vec<&Claim> = CLAIMS.iter().filter(|c| re.is_match(c.id)).collect();
    if hits.is_empty() {
        return Err(Error::UnknownClaim(p.to_string()));
    }
    Ok(hits)
}

pub fn run_claim(c: &Claim, seed: u64) -> ClaimResult {
    let start = Instant::now();
    let out = (c.checker)(seed);
    let runtime_ms = start.elapsed().as_millis() as u64;
    let (status, computed, expected) = match out {
        Ok(o) => (if o.pass() { Status::Pass } else { Status::Fail }, o.computed, o.expected),
        Err(e) => (Status::Error, json!(e.to_string()), Value::Null),
    };
    ClaimResult { id: c.id.to_string(), paper_ref: c.paper_ref.to_string(), status, computed, expected, runtime_ms }
}

/// Run the selected claims on a pool of `threads` workers (0 = rayon default).
pub fn run(pattern: Option<&str>, threads: usize, seed: u64) -> Result<Report, Error> {
    let selected = select(pattern)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Hypothesis(format!("thread pool: {e}")))?;
    let results: Vec<ClaimResult> = pool.install(|| selected.iter().map(|c| run_claim(c, seed)).collect());
    let mut summary = Summary { total: results.len(), ..Summary::default() };
    for r in &results {
        match r.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Error => summary.errors += 1,
        }
    }
    Ok(Report { version: env!("CARGO_PKG_VERSION").to_string(), seed, results, summary })
}

static CLAIMS: &[Claim] = &[
    Claim { id: "golay.dims", paper_ref: "code has dimension 6, its extension by the all-ones word dimension 7, and is self-dual", checker: golay_dims },
    Claim { id: "golay.weights", paper_ref: "weight enumerator 1 + 264 y^6 + 440 y^9 + 24 y^12", checker: golay_weights },
    Claim { id: "golay.pairs", paper_ref: "the weight-12 words come in 12 pairs ±w", checker: golay_pairs },
    Claim { id: "golay.relation", paper_ref: "graph relation between two tetracode words and their sum, all 81 pairs", checker: golay_relation },
    Claim { id: "golay.phi", paper_ref: "Φ from the code to Sym3(F3) is bijective and independent of the sign choices", checker: golay_phi },
    Claim { id: "golay.theta", paper_ref: "Θ maps N0 onto the affine group of order 432 and Φ(βw) = Θ(β)Φ(w)Θ(β)ᵗ", checker: golay_theta },
    Claim { id: "m12.order", paper_ref: "stabilizer search plus closure gives 2M12 of order 190080", checker: m12_order },
    Claim { id: "m12.normalizer", paper_ref: "N of order 864 is the normalizer of the translations, index 220, maximal", checker: m12_normalizer },
    Claim { id: "m12.classes", paper_ref: "two classes of elements of order 3, Jordan types 3+2+1 and 3+3 on the code", checker: m12_classes },
    Claim { id: "m12.orbits", paper_ref: "orbit lengths 12, 132, 220 on the projective points of the code", checker: m12_orbits },
    Claim { id: "mathieu.stabilizers", paper_ref: "orders of 2M11, 2M10, M0_11, M0_10, quotients C2 and D8, cores are pointwise stabilizers", checker: mathieu_stabilizers },
    Claim { id: "mathieu.acttheta", paper_ref: "images of the weight-12 words θ*ᵢ under the generators of N̂", checker: mathieu_acttheta },
    Claim { id: "mathieu.nhat", paper_ref: "N̂ of order 288 with cores of orders 36 and 144, of index 10 and 55", checker: mathieu_nhat },
    Claim { id: "todd.quotients", paper_ref: "quotient maps to A10 and A11 with kernels K2 and K1, equivariant", checker: todd_quotients },
    Claim { id: "todd.pairing", paper_ref: "pairing between A11 and its dual is nondegenerate and invariant", checker: todd_pairing },
    Claim { id: "pgroups.structure", paper_ref: "orders, centers and derived subgroups of S in the four cases", checker: pgroups_structure },
    Claim { id: "pgroups.g0a", paper_ref: "commutator formula, A_*, [S,A], fixed points, centralizers and Jordan types per case", checker: pgroups_g0a },
    Claim { id: "pgroups.cubes", paper_ref: "(xa)³ = x³ iff [x,[x,a]] = 1, exhaustively", checker: pgroups_cubes },
    Claim { id: "pgroups.uwq", paper_ref: "U_k, W_k, Q_k for the four slopes in the M12 case", checker: pgroups_uwq },
    Claim { id: "pgroups.abelian", paper_ref: "exactly 3 abelian subgroups of order 3^5 outside A in the M12 case", checker: pgroups_abelian },
    Claim { id: "pgroups.extraspecial", paper_ref: "extraspecial subgroups of order 3^5 in the M12 case lie in Q_k with center Z", checker: pgroups_extraspecial },
    Claim { id: "pgroups.gamma", paper_ref: "N_Γ(Z) of order 864, invariant subspaces Z and W0, N_M(Q)/Q of order 2592", checker: pgroups_gamma },
    Claim { id: "pgroups.special_q", paper_ref: "unique special Q normal in C_S(Z) with shapes 3^{1+4}, 3^{2+4}, 3^{1+4} and Out_S(Q) of order 3, 3, 9", checker: pgroups_special_q },
    Claim { id: "pgroups.qtriples", paper_ref: "triple multiplication on Q matches the semidirect model, with the conjugation rows", checker: pgroups_qtriples },
    Claim { id: "pgroups.spec", paper_ref: "properties of special 3-groups of order 3^5 and 3^6 in the A6 and M11 cases", checker: pgroups_spec },
    Claim { id: "pgroups.alpha", paper_ref: "α1, α2, α3 are automorphisms of S in the A6 case and α2, α3 commute with β", checker: pgroups_alpha },
    Claim { id: "sp4.order", paper_ref: "Sp4(3) has order 51840 and the similitude group order 103680", checker: sp4_order },
    Claim { id: "sp4.classes", paper_ref: "four classes 3a-3d of elements of order 3, inversion swaps 3a and 3b", checker: sp4_classes },
    Claim { id: "sp4.counts", paper_ref: "120, 240 and 40 subgroups of order 3 by class, 40 Lagrangian planes", checker: sp4_counts },
    Claim { id: "sp4.subgroups", paper_ref: "2A4, 2A5, (Q8×Q8)⋊3 in both classes, 2A6 and 2^{1+4}.A5, all of type 3c/3d", checker: sp4_subgroups },
    Claim { id: "sp4.lifts", paper_ref: "every element of the similitude group lifts to an automorphism of 3^{1+4}", checker: sp4_lifts },
    Claim { id: "ut3.aut3", paper_ref: "automorphisms of UT3(3): kernel of rank 2, image of order 96, unique γ-commuting lifts", checker: ut3_aut3 },
    Claim { id: "ut3.aut9", paper_ref: "automorphisms of UT3(9): kernel of rank 8, image of order 11520, unique γ-commuting lifts", checker: ut3_aut9 },
    Claim { id: "ut3.m11", paper_ref: "UT3(9) is isomorphic to the special group Q in the M11 case", checker: ut3_m11 },
    Claim { id: "emb.sylow", paper_ref: "Sylow 3-subgroup counts 10, 10 and 55 for A6, SL2(9), M11", checker: emb_sylow },
    Claim { id: "emb.sl29", paper_ref: "SL2(9) and PSL2(9) have strongly 3-embedded subgroups", checker: emb_sl29 },
    Claim { id: "emb.m11", paper_ref: "A6, M11, M0_10 and their extensions have strongly 3-embedded subgroups", checker: emb_m11 },
    Claim { id: "emb.negative", paper_ref: "Sp4(3) and PSL2(9)×PSL2(9) have no strongly 3-embedded subgroup", checker: emb_negative },
    Claim { id: "emb.invariance", paper_ref: "the property passes to and from normal subgroups of index prime to p", checker: emb_invariance },
    Claim { id: "emb.reductions", paper_ref: "quotients by normal p'-subgroups, product criterion, overgroups of witnesses", checker: emb_reductions },
    Claim { id: "emb.chain", paper_ref: "automorphisms acting trivially on the factors of a chain have p-power order", checker: emb_chain },
    Claim { id: "emb.obstructions", paper_ref: "hypotheses of the non-essentiality criteria on concrete data", checker: emb_obstructions },
    Claim { id: "emb.gl4", paper_ref: "Jordan types 2+2 for SL2(9) and 3+1 for Ω4^-(3) on F3^4, 3 for Ω3(3)", checker: emb_gl4 },
    Claim { id: "emb.gl3", paper_ref: "random subgroups of GL3(3) generated by two Sylow 3-subgroups", checker: emb_gl3 },
];

fn golay_dims(_: u64) -> Result<Outcome, Error> {
    let g = golay::golay();
    let basis = g.code.basis();
    let self_dual = basis.iter().all(|a| basis.iter().all(|b| golay::dot(a, b).is_zero()));
    Ok(Outcome::new(
        json!({"dim": golay::rank_of(basis), "dim_bar": golay::rank_of(&g.bar_basis), "self_dual": self_dual}),
        json!({"dim": 6, "dim_bar": 7, "self_dual": true}),
    ))
}

fn golay_weights(_: u64) -> Result<Outcome, Error> {
    let w = golay::golay().code.weight_enumerator();
    let nonzero: Vec<(usize, usize)> = w.iter().enumerate().filter(|(_, &n)| n > 0).map(|(k, &n)| (k, n)).collect();
    Ok(Outcome::new(json!(nonzero), json!([[0, 1], [6, 264], [9, 440], [12, 24]])))
}

fn golay_pairs(_: u64) -> Result<Outcome, Error> {
    let words: Vec<_> = golay::golay().code.codewords().iter().filter(|w| golay::weight(w) == 12).collect();
    let pairs: BTreeSet<_> = words.iter().map(|w| monomial::normalize_codeword(w)).collect();
    let closed = words.iter().all(|w| words.contains(&&golay::neg(w)));
    Ok(Outcome::new(
        json!({"words": words.len(), "pairs": pairs.len(), "closed_under_negation": closed}),
        json!({"words": 24, "pairs": 12, "closed_under_negation": true}),
    ))
}

fn golay_relation(_: u64) -> Result<Outcome, Error> {
    let t = golay::tetracode();
    let holds = t.iter().flat_map(|a| t.iter().map(move |b| (a, b))).filter(|(a, b)| golay::graph_relation_holds(a, b)).count();
    Ok(Outcome::new(json!(holds), json!(81)))
}

fn golay_phi(_: u64) -> Result<Outcome, Error> {
    let p = golay::phi();
    let words = golay::golay().code.codewords();
    let images: BTreeSet<_> = words.iter().map(|w| p.apply(w)).collect();
    let independent = (1..16u8).all(|mask| {
        let other = golay::PhiBar::new(mask);
        words.iter().all(|w| other.apply(w) == p.bar().apply(w))
    });
    let additive = words.iter().step_by(7).all(|a| {
        words.iter().step_by(11).all(|b| p.apply(&golay::add(a, b)) == golay::sym_add(&p.apply(a), &p.apply(b)))
    });
    Ok(Outcome::new(
        json!({"images": images.len(), "sign_independent": independent, "additive": additive}),
        json!({"images": 729, "sign_independent": true, "additive": true}),
    ))
}

fn golay_theta(_: u64) -> Result<Outcome, Error> {
    let n0 = monomial::group_closure(&golay::n0_generators())?;
    let p = golay::phi();
    let mut images = BTreeSet::new();
    let mut identity_pairs = 0usize;
    for b in n0.elements() {
        let m = golay::theta(b).ok_or_else(|| Error::Hypothesis("element of N0 outside the image of Θ".into()))?;
        images.insert(m);
        identity_pairs +=
            golay::golay().code.codewords().iter().filter(|w| p.apply(&b.apply(w)) == golay::congruence(&m, &p.apply(w))).count();
    }
    Ok(Outcome::new(
        json!({"n0": n0.len(), "image": images.len(), "identity_pairs": identity_pairs}),
        json!({"n0": 432, "image": 432, "identity_pairs": 432 * 729}),
    ))
}

fn m12_order(_: u64) -> Result<Outcome, Error> {
    let m = monomial::m12();
    let preserves = m.group.generators().iter().all(|x| golay::golay().code.basis().iter().all(|b| golay::golay().code.contains(&x.apply(b))));
    Ok(Outcome::new(
        json!({"order": m.group.len(), "extra_outside_n": !m.extra.permutes_columns(), "preserves_code": preserves}),
        json!({"order": 190080, "extra_outside_n": true, "preserves_code": true}),
    ))
}

fn m12_normalizer(_: u64) -> Result<Outcome, Error> {
    let m = monomial::m12();
    let g = &m.group;
    let whole = g.whole();
    let norm = whole.normalizer(g, &m.t);
    let primitive = monomial::is_maximal_by_primitivity(g, &whole, &m.n)?;
    Ok(Outcome::new(
        json!({"n": m.n.order(), "n_is_normalizer": norm == m.n, "index": whole.order() / m.n.order(), "primitive": primitive}),
        json!({"n": 864, "n_is_normalizer": true, "index": 220, "primitive": true}),
    ))
}

fn m12_classes(_: u64) -> Result<Outcome, Error> {
    let cls = monomial::order3_class_data(monomial::m12());
    let parts: BTreeSet<Vec<usize>> = cls.iter().map(|c| c.partition.clone()).collect();
    let max_rank = cls.iter().map(|c| c.fixed_rank).max().unwrap_or(0);
    Ok(Outcome::new(
        json!({"classes": cls.len(), "partitions": parts, "max_fixed_rank": max_rank}),
        json!({"classes": 2, "partitions": [[3, 2, 1], [3, 3]], "max_fixed_rank": 3}),
    ))
}

fn m12_orbits(_: u64) -> Result<Outcome, Error> {
    let lens = monomial::orbit_lengths_on_projective(monomial::m12().group.generators());
    Ok(Outcome::new(json!(lens), json!([12, 132, 220])))
}

fn mathieu_stabilizers(_: u64) -> Result<Outcome, Error> {
    let d = mathieu::mathieu();
    let g = &monomial::m12().group;
    let q11 = d.m2_11.quotient(g, &d.m0_11);
    let q10 = d.m2_10.quotient(g, &d.m0_10);
    let w10 = Subgroup::whole(&q10);
    let d8 = q10.order() == 8 && !w10.is_abelian(&q10) && mathieu::involution_count(&q10, &w10) == 5;
    Ok(Outcome::new(
        json!({
            "orders": [d.m2_11.order(), d.m2_10.order(), d.m0_11.order(), d.m0_10.order()],
            "quotient_11": q11.order(),
            "quotient_10_is_d8": d8,
            "cores_are_pointwise_stabilizers": d.m0_11 == d.c_k1 && d.m0_10 == d.c_k2,
        }),
        json!({
            "orders": [15840, 2880, 7920, 360],
            "quotient_11": 2,
            "quotient_10_is_d8": true,
            "cores_are_pointwise_stabilizers": true,
        }),
    ))
}

fn mathieu_acttheta(_: u64) -> Result<Outcome, Error> {
    let table = mathieu::acttheta_table();
    let expected = mathieu::acttheta_expected();
    let cells = table.iter().zip(&expected).map(|(a, b)| a.1.iter().zip(&b.1).filter(|(x, y)| x == y).count()).sum::<usize>();
    Ok(Outcome::new(json!({"rows": table.len(), "matching_cells": cells}), json!({"rows": 4, "matching_cells": 12})))
}

fn mathieu_nhat(_: u64) -> Result<Outcome, Error> {
    let r = mathieu::n_hat_report();
    Ok(Outcome::new(
        json!({"order": r.order_n_hat, "formula": r.matches_formula, "cores": r.core_orders, "core_formulas": r.core_formulas,
               "indices": r.indices, "primitive": r.primitive, "t_sylow": r.t_sylow}),
        json!({"order": 288, "formula": true, "cores": [36, 144], "core_formulas": true,
               "indices": [10, 55], "primitive": [true, true], "t_sylow": true}),
    ))
}

fn todd_quotients(_: u64) -> Result<Outcome, Error> {
    let row = |s: Shape| {
        let r = mathieu::quotient_equivariance(s);
        json!([r.image_size, r.kernel_matches, r.equivariant, r.kernel_invariant])
    };
    let rel = [Shape::A10, Shape::A11, Shape::A11Dual].into_iter().all(mathieu::todd_relations_hold);
    Ok(Outcome::new(
        json!({"a10": row(Shape::A10), "a11": row(Shape::A11), "relations": rel && mathieu::monomial_relations_hold()}),
        json!({"a10": [81, true, true, true], "a11": [243, true, true, true], "relations": true}),
    ))
}

fn todd_pairing(_: u64) -> Result<Outcome, Error> {
    let r = mathieu::dual_pairing_check();
    Ok(Outcome::new(json!({"gram_rank": r.gram_rank, "adjoint": r.adjoint}), json!({"gram_rank": 5, "adjoint": true})))
}

fn pgroups_structure(_: u64) -> Result<Outcome, Error> {
    let mut computed = Vec::new();
    for case in Case::ALL {
        let r = pgroups::s_report(case);
        let derived = if case == Case::M12 { r.derived_is_a_star_times_tt } else { r.derived_is_a_star };
        computed.push(json!([case.name(), r.order, r.center_order, r.center_is_fixed_points, derived, r.c_s_a_is_a]));
    }
    let expected: Vec<Value> = [(Case::M12, 19683, 3), (Case::A6, 729, 3), (Case::M11, 2187, 9), (Case::M11Dual, 2187, 3)]
        .into_iter()
        .map(|(c, o, z)| json!([c.name(), o, z, true, true, true]))
        .collect();
    let sorted = |mut v: Vec<Value>| {
        v.sort_by_key(|x| x[0].as_str().unwrap_or_default().to_string());
        v
    };
    Ok(Outcome::new(json!(sorted(computed)), json!(sorted(expected))))
}

fn pgroups_g0a(_: u64) -> Result<Outcome, Error> {
    let rows: Vec<Value> = Case::TODD
        .into_iter()
        .map(|case| {
            let r = pgroups::table_g0a_check(case);
            json!([case.name(), r.commutator_formula, r.a_star_shape, r.s_a_shape, r.fixed_shape, r.centralizer_shape, r.jordan_ok])
        })
        .collect();
    let expected: Vec<Value> = Case::TODD.into_iter().map(|c| json!([c.name(), true, true, true, true, true, true])).collect();
    Ok(Outcome::new(json!(rows), json!(expected)))
}

fn pgroups_cubes(_: u64) -> Result<Outcome, Error> {
    let rows: Vec<Value> = Case::ALL
        .into_iter()
        .map(|case| {
            let r = pgroups::cube_report(case);
            // the A_* statements are only made for the Todd-module cases
            match case {
                Case::M12 => json!([case.name(), r.criterion_holds]),
                _ => json!([case.name(), r.criterion_holds, r.a_star_implies_equal, r.equal_iff_a_star.unwrap_or(true)]),
            }
        })
        .collect();
    let expected: Vec<Value> = Case::ALL
        .into_iter()
        .map(|c| if c == Case::M12 { json!([c.name(), true]) } else { json!([c.name(), true, true, true]) })
        .collect();
    Ok(Outcome::new(json!(rows), json!(expected)))
}

fn pgroups_uwq(_: u64) -> Result<Outcome, Error> {
    let rows: Vec<Value> = Slope::all()
        .into_iter()
        .map(|k| {
            let r = pgroups::uwq_report(k);
            json!([r.w_matches && r.centralizer_matches, r.q_order, r.q_abelian, r.q_extraspecial, r.q_exponent])
        })
        .collect();
    Ok(Outcome::new(
        json!(rows),
        json!([[true, 243, false, true, 3], [true, 243, false, true, 3], [true, 243, false, true, 3], [true, 243, true, false, 3]]),
    ))
}

fn pgroups_abelian(_: u64) -> Result<Outcome, Error> {
    let c = pgroups::count_abelian_3_5_not_in_a();
    Ok(Outcome::new(
        json!({"found": c.found.len(), "contains_q_inf": c.contains_q_inf}),
        json!({"found": 3, "contains_q_inf": true}),
    ))
}

fn pgroups_extraspecial(_: u64) -> Result<Outcome, Error> {
    let r = pgroups::extraspecial_3_5_classification();
    let finite_nonempty = r.found_per_slope[..3].iter().all(|&n| n > 0);
    Ok(Outcome::new(
        json!({"in_finite_slopes": finite_nonempty, "at_infinity": r.found_per_slope[3], "center_z": r.all_center_z, "in_q_k": r.all_in_q_k}),
        json!({"in_finite_slopes": true, "at_infinity": 0, "center_z": true, "in_q_k": true}),
    ))
}

fn pgroups_gamma(_: u64) -> Result<Outcome, Error> {
    let r = pgroups::gamma_report();
    let shape = r.o3_order == 9 && r.o3_elementary && r.o3_self_centralizing && r.o3_action_image == 48 && r.direct_minus_id;
    Ok(Outcome::new(
        json!({"n_gamma_z": r.normalizer_z, "shape_e9_gl23_c2": shape, "only_z_and_w0": r.only_z_and_w0, "n_m_q_mod_q": r.n_m_q_mod_q}),
        json!({"n_gamma_z": 864, "shape_e9_gl23_c2": true, "only_z_and_w0": true, "n_m_q_mod_q": 2592}),
    ))
}

fn pgroups_special_q(_: u64) -> Result<Outcome, Error> {
    let mut rows = Vec::new();
    for case in Case::TODD {
        let r = pgroups::unique_special_q(case)?;
        rows.push(json!([case.name(), r.q0_count, r.shape, r.out_s_q]));
    }
    let expected: Vec<Value> = [(Case::A6, (1, 4), 3), (Case::M11, (2, 4), 3), (Case::M11Dual, (1, 4), 9)]
        .into_iter()
        .map(|(c, s, o)| json!([c.name(), 1, s, o]))
        .collect();
    Ok(Outcome::new(json!(rows), json!(expected)))
}

fn pgroups_qtriples(_: u64) -> Result<Outcome, Error> {
    let rows: Vec<Value> = Case::TODD
        .into_iter()
        .map(|case| {
            let r = pgroups::qtriple_check(case);
            json!([case.name(), r.identity_ok && r.mul_matches, r.n_hat_automorphisms, r.conj_rows, r.translation_row])
        })
        .collect();
    let expected: Vec<Value> = Case::TODD.into_iter().map(|c| json!([c.name(), true, true, [true, true, true], true])).collect();
    Ok(Outcome::new(json!(rows), json!(expected)))
}

fn pgroups_spec(_: u64) -> Result<Outcome, Error> {
    let s = pgroups::s_group(Case::M11);
    let q = pgroups::unique_special_q(Case::M11)?.q.ok_or_else(|| Error::SearchFailed("Q".into()))?;
    let r = pgroups::spec_lemma_suite(s, &q)?;
    let mut c_counts = Vec::new();
    for case in [Case::A6, Case::M11] {
        let s = pgroups::s_group(case);
        let q = pgroups::unique_special_q(case)?.q.ok_or_else(|| Error::SearchFailed("Q".into()))?;
        let (bar, _) = pgroups::mod_center(s, &q);
        c_counts.push(pgroups::spec_lemma_suite(&bar, &Subgroup::whole(&bar))?.c_count);
    }
    Ok(Outcome::new(
        json!({"a": r.a_holds, "b": r.b_holds, "d_count": r.d_count, "d_pairwise_z": r.d_pairwise_z, "c_counts": c_counts}),
        json!({"a": true, "b": true, "d_count": 10, "d_pairwise_z": true, "c_counts": [1, 1]}),
    ))
}

fn pgroups_alpha(_: u64) -> Result<Outcome, Error> {
    let r = pgroups::alpha_automorphisms();
    Ok(Outcome::new(
        json!({"cocycle": r.cocycle, "automorphism": r.automorphism, "commute_with_beta": r.commute_with_beta, "beta": r.beta_automorphism}),
        json!({"cocycle": [true, true, true], "automorphism": [true, true, true], "commute_with_beta": [true, true], "beta": true}),
    ))
}

fn sp4_order(_: u64) -> Result<Outcome, Error> {
    let d = sp4ut3::sp4();
    Ok(Outcome::new(json!([d.sp.len(), d.star.len()]), json!([51840, 103680])))
}

fn sp4_classes(_: u64) -> Result<Outcome, Error> {
    let c = sp4ut3::class_and_subgroup_counts()?;
    let labels: BTreeSet<String> = c.class_sizes.iter().map(|x| x.0.to_string()).collect();
    let det_labels = [
        sp4ut3::classify_order3(&sp4ut3::unipotent([[1, 0], [0, 1]]))?,
        sp4ut3::classify_order3(&sp4ut3::unipotent([[1, 0], [0, -1]]))?,
    ];
    Ok(Outcome::new(
        json!({"labels": labels, "constant": c.labels_constant_on_classes, "inversion_swaps_ab": c.inversion_swaps_ab,
               "inversion_fixes_cd": c.inversion_fixes_cd, "det_labels": det_labels.map(|l| l.to_string())}),
        json!({"labels": ["3a", "3b", "3c", "3d"], "constant": true, "inversion_swaps_ab": true,
               "inversion_fixes_cd": true, "det_labels": [ClassLabel::C3.to_string(), ClassLabel::D3.to_string()]}),
    ))
}

fn sp4_counts(_: u64) -> Result<Outcome, Error> {
    let c = sp4ut3::class_and_subgroup_counts()?;
    Ok(Outcome::new(
        json!({"orbits": c.subgroup_orbits, "lagrangians": c.lagrangians, "per_lagrangian": c.per_lagrangian}),
        json!({"orbits": [120, 240, 40], "lagrangians": 40, "per_lagrangian": [[40, [3]], [40, [6]]]}),
    ))
}

fn sp4_subgroups(seed: u64) -> Result<Outcome, Error> {
    let r = sp4ut3::construct_2a4_2a5_q8q8_2a6(seed)?;
    let good = |s: &sp4ut3::SubgroupReport| s.types_cd_only() && s.o3_trivial && s.generated_by_3_elements && s.in_sp4;
    let pair = |p: &[sp4ut3::SubgroupReport; 2]| {
        json!([p[0].order, p[1].order, good(&p[0]) && good(&p[1]) && p[0].types.len() == 1 && p[1].types.len() == 1 && p[0].types != p[1].types])
    };
    Ok(Outcome::new(
        json!({"2A4": pair(&r.two_a4), "2A5": pair(&r.two_a5), "Q8xQ8:3": pair(&r.q8q8c3),
               "2A6": [r.sl2_9.order, good(&r.sl2_9)], "2^(1+4).A5": [r.two_1_4_a5.order, r.extraspecial_order, r.two_1_4_a5.types_cd_only()]}),
        json!({"2A4": [24, 24, true], "2A5": [120, 120, true], "Q8xQ8:3": [192, 192, true],
               "2A6": [720, true], "2^(1+4).A5": [1920, 32, true]}),
    ))
}

fn sp4_lifts(seed: u64) -> Result<Outcome, Error> {
    let r = sp4ut3::lift_report(20, seed);
    Ok(Outcome::new(
        json!([r.automorphisms, r.induced_maps, r.composition_inner, r.minus_identity_fixes_z, r.similitude_inverts_z, r.incompatible_rejected]),
        json!([true, true, true, true, true, true]),
    ))
}

fn ut3_row(q: usize, seed: u64) -> Result<Value, Error> {
    let r = sp4ut3::ut3_aut_suite(q, 100, seed)?;
    Ok(json!({"kernel_rank": r.kernel_rank, "image_order": r.image_order, "unique_lifts": r.unique_commuting_lifts,
              "automorphisms": r.lifts_are_automorphisms && r.gamma_involution && r.gamma_inverts_kernel}))
}

fn ut3_aut3(seed: u64) -> Result<Outcome, Error> {
    Ok(Outcome::new(ut3_row(3, seed)?, json!({"kernel_rank": 2, "image_order": 96, "unique_lifts": 100, "automorphisms": true})))
}

fn ut3_aut9(seed: u64) -> Result<Outcome, Error> {
    Ok(Outcome::new(ut3_row(9, seed)?, json!({"kernel_rank": 8, "image_order": 11520, "unique_lifts": 100, "automorphisms": true})))
}

fn ut3_m11(_: u64) -> Result<Outcome, Error> {
    Ok(Outcome::new(json!(sp4ut3::ut3_9_matches_m11_q()), json!(true)))
}

fn emb_sylow(_: u64) -> Result<Outcome, Error> {
    let a6 = strongemb::testbed::a6();
    let sl = strongemb::testbed::sl2_9();
    let m = monomial::m12();
    let counts = [
        strongemb::sylow_p(&a6, &a6.whole(), 3).count(),
        strongemb::sylow_p(&sl, &sl.whole(), 3).count(),
        strongemb::sylow_p(&m.group, &mathieu::mathieu().m0_11, 3).count(),
    ];
    Ok(Outcome::new(json!(counts), json!([10, 10, 55])))
}

fn verdict_rows(names: &[&str], vs: &[strongemb::Verdict]) -> Value {
    json!(vs.iter().filter(|v| names.contains(&v.name.as_str())).map(|v| json!([v.name, v.verdict, v.agree])).collect::<Vec<_>>())
}

fn emb_sl29(_: u64) -> Result<Outcome, Error> {
    let sl = strongemb::testbed::sl2_9();
    let w = sl.whole();
    let z = w.center(&sl);
    let psl = w.quotient(&sl, &z);
    let vs = vec![strongemb::verdict("SL2(9)", &sl, &w, 3)?, strongemb::verdict("PSL2(9)", &psl, &Subgroup::whole(&psl), 3)?];
    let names = ["SL2(9)", "PSL2(9)"];
    Ok(Outcome::new(verdict_rows(&names, &vs), json!(names.map(|n| json!([n, true, true])))))
}

fn emb_m11(_: u64) -> Result<Outcome, Error> {
    let vs = strongemb::standard_verdicts(false)?;
    let names = ["A6", "M0_10", "M0_11 = M11", "2M10", "2M11"];
    Ok(Outcome::new(verdict_rows(&names, &vs), json!(names.map(|n| json!([n, true, true])))))
}

fn emb_negative(_: u64) -> Result<Outcome, Error> {
    let sp = &sp4ut3::sp4().sp;
    let aa = strongemb::testbed::a6_times_a6();
    let vs = vec![strongemb::verdict("Sp4(3)", sp, &sp.whole(), 3)?, strongemb::verdict("PSL2(9)xPSL2(9)", &aa, &aa.whole(), 3)?];
    let names = ["Sp4(3)", "PSL2(9)xPSL2(9)"];
    Ok(Outcome::new(verdict_rows(&names, &vs), json!(names.map(|n| json!([n, false, true])))))
}

fn emb_invariance(_: u64) -> Result<Outcome, Error> {
    let r = strongemb::reduction_lemma_tests(false)?;
    let rows: Vec<Value> = r.index_pairs.iter().map(|(n, i, a, b)| json!([n, i, a, b])).collect();
    Ok(Outcome::new(
        json!(rows),
        json!([["2M10/M0_10", 8, true, true], ["2M11/M0_11", 2, true, true], ["A6xC2/A6", 2, true, true]]),
    ))
}

fn emb_reductions(_: u64) -> Result<Outcome, Error> {
    let r = strongemb::reduction_lemma_tests(false)?;
    Ok(Outcome::new(
        json!({"quotients": r.quotients, "g_prod": r.g_prod, "monotone": r.monotone}),
        json!({"quotients": [["SL2(9)/{±I}", true], ["A6xC2/C2", true]], "g_prod": [true, true, true], "monotone": true}),
    ))
}

fn emb_chain(_: u64) -> Result<Outcome, Error> {
    let s = pgroups::s_group(Case::M12);
    let uwq = pgroups::build_uwq(Slope::Finite(F3::ZERO));
    let chain = vec![pgroups::m12_z(), uwq.w.clone(), uwq.q.clone()];
    let zero = crate::linalg::SqMat::from_i64([[0; 3]; 3]);
    let eta0 = s.from_sym(&zero, &pgroups::eta(Slope::Finite(F3::ZERO)));
    let eta_inf = s.from_sym(&zero, &pgroups::eta(Slope::Infinity));
    let conj = strongemb::p_power_order_check(s, &uwq.q, &chain, |x| s.conj(eta0, x), 3)?;
    let id = strongemb::p_power_order_check(s, &uwq.q, &chain, |x| x, 3)?;
    let rejected = strongemb::p_power_order_check(s, &uwq.q, &chain, |x| s.conj(eta_inf, x), 3).is_err();
    Ok(Outcome::new(
        json!({"conjugation": conj, "identity": id, "violation_rejected": rejected}),
        json!({"conjugation": 3, "identity": 1, "violation_rejected": true}),
    ))
}

fn emb_obstructions(_: u64) -> Result<Outcome, Error> {
    use strongemb::{ChainDatum, ObstructionKind, ObstructionVerdict};
    let s = pgroups::s_group(Case::M12);
    let z = pgroups::m12_z();
    let d = ChainDatum {
        s: Subgroup::whole(s),
        p: z.clone(),
        chain: vec![Subgroup::trivial(s), z],
        witness: Some(s.t_elem(1)),
        t: None,
    };
    let qchar = strongemb::essential_obstruction(s, &d, ObstructionKind::QcharP, 3)?;
    let c = strongemb::m12_filtered_c_datum();
    let fc = strongemb::essential_obstruction(s, &c, ObstructionKind::FilteredC, 3)?;
    let s11 = pgroups::s_group(Case::M11);
    let a = s11.a_subgroup();
    let db = ChainDatum { s: Subgroup::whole(s11), p: a.clone(), chain: vec![Subgroup::trivial(s11), a], witness: None, t: None };
    let fb = strongemb::essential_obstruction(s11, &db, ObstructionKind::FilteredB, 3)?;
    let show = |v: ObstructionVerdict| format!("{v:?}");
    Ok(Outcome::new(
        json!({"qchar_p": show(qchar), "filtered_c": show(fc), "filtered_c_numbers": strongemb::m12_filtered_c_numbers(), "filtered_b": show(fb)}),
        json!({"qchar_p": "Obstructed", "filtered_c": "Obstructed", "filtered_c_numbers": [9, 3], "filtered_b": "Consistent"}),
    ))
}

fn emb_gl4(_: u64) -> Result<Outcome, Error> {
    let r = strongemb::gl4_jordan_suite()?;
    Ok(Outcome::new(
        json!({"sl2_9": r.sl2_9_types, "orthogonal": r.orthogonal_order, "core": r.core_order, "core_types": r.core_types,
               "anisotropic_tail": r.tail_anisotropic, "core_embedded": r.core_has_strongly_3_embedded, "omega3": r.omega3_types}),
        json!({"sl2_9": [[2, 2]], "orthogonal": 1440, "core": 360, "core_types": [[3, 1]],
               "anisotropic_tail": true, "core_embedded": true, "omega3": [[3]]}),
    ))
}

fn emb_gl3(seed: u64) -> Result<Outcome, Error> {
    let (n, bad) = strongemb::gl3_spot_check(200, seed);
    Ok(Outcome::new(json!({"samples": n, "violations": bad}), json!({"samples": 200, "violations": 0})))
}

/// The 729 codewords as ternary strings, in index order.
pub fn dump_code() -> Vec<String> {
    golay::golay().code.codewords().iter().map(golay::render).collect()
}

pub const GROUP_NAMES: [&str; 7] = ["N0", "N", "2M12", "2M11", "2M10", "M0_10", "M0_11"];

/// Canonical keys (hex, sorted) of the elements of a named monomial group.
pub fn dump_group(name: &str) -> Result<Vec<String>, Error> {
    let m = monomial::m12();
    let sub = match name {
        "N0" => &m.n0,
        "N" => &m.n,
        "2M12" => return Ok(sorted_keys(&m.group, &Subgroup::whole(&m.group))),
        "2M11" => &mathieu::mathieu().m2_11,
        "2M10" => &mathieu::mathieu().m2_10,
        "M0_10" => &mathieu::mathieu().m0_10,
        "M0_11" => &mathieu::mathieu().m0_11,
        _ => return Err(Error::UnknownClaim(format!("group {name}"))),
    };
    Ok(sorted_keys(&m.group, sub))
}

fn sorted_keys(g: &crate::group::Group<monomial::MonMap>, sub: &Subgroup) -> Vec<String> {
    let mut keys: Vec<u64> = sub.members().iter().map(|&k| g.element(k).key()).collect();
    keys.sort_unstable();
    keys.iter().map(|k| format!("{k:016x}")).collect()
}

pub const SUBGROUP_NAMES: [&str; 6] = ["S", "A", "T", "Z", "A_star", "Q"];

/// Sorted element indices of a named subgroup of S for one case.
pub fn dump_subgroup(case: &str, name: &str) -> Result<Vec<usize>, Error> {
    let case = Case::parse(case).ok_or_else(|| Error::UnknownClaim(format!("case {case}")))?;
    let s = pgroups::s_group(case);
    let sub = match name {
        "S" => Subgroup::whole(s),
        "A" => s.a_subgroup(),
        "T" => s.t_subgroup(),
        "Z" => Subgroup::whole(s).center(s),
        "A_star" => pgroups::a_star(s),
        "Q" if case == Case::M12 => pgroups::m12_a_star_t(),
        "Q" => pgroups::unique_special_q(case)?.q.ok_or_else(|| Error::SearchFailed("special subgroup".into()))?,
        _ => return Err(Error::UnknownClaim(format!("subgroup {name}"))),
    };
    let mut v = sub.members().to_vec();
    v.sort_unstable();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_namespaced() {
        let ids: BTreeSet<&str> = CLAIMS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CLAIMS.len());
        assert!(CLAIMS.iter().all(|c| c.id.contains('.') && !c.paper_ref.is_empty()));
        assert!(ids.contains("m12.orbits") && ids.contains("sp4.counts"));
    }

    #[test]
    fn dumps() {
        let code = dump_code();
        assert_eq!(code.len(), 729);
        assert!(code.iter().all(|w| w.len() == 12));
        assert_eq!(dump_group("N0").unwrap().len(), monomial::m12().n0.order());
        assert!(dump_group("M13").is_err());
        let z = dump_subgroup("a6", "Z").unwrap();
        assert!(z.windows(2).all(|w| w[0] < w[1]));
        assert!(dump_subgroup("a6", "nope").is_err());
        assert!(dump_subgroup("m13", "S").is_err());
    }

    #[test]
    fn globbing() {
        assert!(glob_regex("golay.*").is_match("golay.dims"));
        assert!(!glob_regex("golay.*").is_match("m12.orbits"));
        assert!(glob_regex("sp4.c?unts").is_match("sp4.counts"));
        assert!(!glob_regex("sp4").is_match("sp4.counts"));
        let g = select(Some("golay.*")).unwrap();
        assert!(g.iter().all(|c| c.id.starts_with("golay.")) && g.len() == 6);
        assert_eq!(select(None).unwrap().len(), CLAIMS.len());
        assert_eq!(select(Some("nope.*")).err(), Some(Error::UnknownClaim("nope.*".into())));
    }

    #[test]
    fn run_golay_claims() {
        let r = run(Some("golay.*"), 2, DEFAULT_SEED).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert_eq!(r.summary.total, 6);
        let text = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn mismatch_is_a_failure() {
        let o = Outcome::new(json!(48), json!(96));
        assert!(!o.pass());
    }
}
