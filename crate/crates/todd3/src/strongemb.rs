//! Sylow systems, strongly p-embedded subgroups via p-isolation, the reduction
//! lemmas on small test groups, hypothesis checks for the non-essentiality
//! criteria, and Jordan types of SL2(9) and Ω4^-(3) on F3⁴.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::Error;
use crate::gf::F3;
use crate::group::{self, FiniteGroup, Group, Perm, Subgroup};
use crate::linalg::{self, MatF3, QuadraticForm, SqMat, VecF3};
use crate::mathieu;
use crate::monomial;
use crate::pgroups::{self, Case, Slope};
use crate::sp4ut3;

/// All Sylow p-subgroups of `h`, as the conjugation orbit of one.
#[derive(Clone, Debug)]
pub struct SylowSystem {
    pub p: usize,
    pub sylows: Vec<Subgroup>,
}

impl SylowSystem {
    pub fn count(&self) -> usize {
        self.sylows.len()
    }

    pub fn sylow_order(&self) -> usize {
        self.sylows.first().map_or(1, Subgroup::order)
    }
}

pub fn sylow_p<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, p: usize) -> SylowSystem {
    let first = group::sylow_subgroup(g, h, p);
    let mut seen: FxHashMap<Vec<usize>, usize> = FxHashMap::default();
    seen.insert(first.members().to_vec(), 0);
    let mut sylows = vec![first];
    let mut k = 0;
    while k < sylows.len() {
        for &x in h.gens() {
            let c = sylows[k].conjugate(g, x);
            if !seen.contains_key(c.members()) {
                seen.insert(c.members().to_vec(), sylows.len());
                sylows.push(c);
            }
        }
        k += 1;
    }
    SylowSystem { p, sylows }
}

/// Every element of p-power order lies in some Sylow p-subgroup.
pub fn covers_p_elements<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, sys: &SylowSystem) -> bool {
    h.members()
        .iter()
        .filter(|&&x| group::is_p_power(g.element_order(x), sys.p))
        .all(|&x| sys.sylows.iter().any(|s| s.contains(x)))
}

#[derive(Clone, Debug)]
pub struct Embedding {
    pub verdict: bool,
    pub sylow_count: usize,
    pub components: Vec<usize>,
    pub witness: Option<Subgroup>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// p-isolation: the graph on Syl_p(h) joining P, P' when p divides |P ∩ P'|
/// is disconnected. The witness is the stabilizer of the component of the
/// first Sylow.
pub fn has_strongly_p_embedded<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, p: usize) -> Result<Embedding, Error> {
    if h.order() % p != 0 {
        return Err(Error::PrimeDoesNotDivide { p });
    }
    let sys = sylow_p(g, h, p);
    let n = sys.count();
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let sys = &sys;
            (i + 1..n).filter(move |&j| sys.sylows[i].intersection_order(&sys.sylows[j]) > 1).map(move |j| (i, j))
        })
        .collect();
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, j) in edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a] = b;
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let mut sizes: FxHashMap<usize, usize> = FxHashMap::default();
    for &r in &roots {
        *sizes.entry(r).or_default() += 1;
    }
    let mut components: Vec<usize> = sizes.values().copied().collect();
    components.sort_unstable();
    let verdict = components.len() > 1;
    let witness = verdict.then(|| {
        let index: FxHashMap<&[usize], usize> = sys.sylows.iter().enumerate().map(|(k, s)| (s.members(), k)).collect();
        let p0 = &sys.sylows[0];
        let root = roots[0];
        let members: Vec<usize> = h
            .members()
            .par_iter()
            .copied()
            .filter(|&x| {
                let mut c: Vec<usize> = p0.members().iter().map(|&m| g.conj(x, m)).collect();
                c.sort_unstable();
                roots[index[c.as_slice()]] == root
            })
            .collect();
        Subgroup::from_members(g, members)
    });
    Ok(Embedding { verdict, sylow_count: n, components, witness })
}

/// Direct test of the definition: `k < h` proper, p | |k|, and p ∤ |k ∩ xkx⁻¹| for x ∈ h∖k.
pub fn is_strongly_p_embedded<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, k: &Subgroup, p: usize) -> bool {
    if k.order() == h.order() || k.order() % p != 0 || !k.is_subgroup_of(h) {
        return false;
    }
    let (_, reps) = h.coset_labels(g, k);
    reps.par_iter().filter(|&&x| !k.contains(x)).all(|&x| k.conjugate(g, x).intersection_order(k) % p != 0)
}

/// Both characterizations, compared.
pub fn characterizations_agree<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, p: usize) -> Result<bool, Error> {
    let e = has_strongly_p_embedded(g, h, p)?;
    Ok(match &e.witness {
        Some(w) => is_strongly_p_embedded(g, h, w, p),
        None => {
            let n = group::sylow_subgroup(g, h, p);
            let norm = h.normalizer(g, &n);
            norm.order() == h.order() || !is_strongly_p_embedded(g, h, &norm, p)
        }
    })
}

/// Test groups.
pub mod testbed {
    use super::*;

    pub fn alternating(n: usize, extra_points: usize) -> Vec<Perm> {
        let deg = n + extra_points;
        let mut gens = vec![Perm::from_cycles(deg, &[&[0, 1, 2]])];
        let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
        gens.push(Perm::from_cycles(deg, &[long.as_slice()]));
        gens
    }

    pub fn a6() -> Group<Perm> {
        Group::closure(&alternating(6, 0)).expect("A6")
    }

    pub fn a6_times_c2() -> Group<Perm> {
        let mut gens = alternating(6, 2);
        gens.push(Perm::from_cycles(8, &[&[6, 7]]));
        Group::closure(&gens).expect("A6 × C2")
    }

    pub fn a6_times_a6() -> Group<Perm> {
        let mut gens = alternating(6, 6);
        let shift = |p: &Perm| Perm::from_images(&(0..12).map(|i| if i < 6 { i } else { 6 + p.apply(i - 6) }).collect::<Vec<_>>());
        let second: Vec<Perm> = alternating(6, 0).iter().map(shift).collect();
        gens.extend(second);
        Group::closure(&gens).expect("A6 × A6")
    }

    /// A5 × C2 × C2 on 9 points.
    pub fn a5_times_v4() -> Group<Perm> {
        let mut gens = alternating(5, 4);
        gens.push(Perm::from_cycles(9, &[&[5, 6]]));
        gens.push(Perm::from_cycles(9, &[&[7, 8]]));
        Group::closure(&gens).expect("A5 × V4")
    }

    pub fn sl2_9() -> Group<SqMat<4>> {
        Group::closure(&sp4ut3::sl2_9_generators().0).expect("SL2(9)")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub p: usize,
    pub order: usize,
    pub sylow_count: usize,
    pub verdict: bool,
    pub agree: bool,
}

pub fn verdict<G: FiniteGroup + ?Sized>(name: &str, g: &G, h: &Subgroup, p: usize) -> Result<Verdict, Error> {
    let e = has_strongly_p_embedded(g, h, p)?;
    Ok(Verdict {
        name: name.to_string(),
        p,
        order: h.order(),
        sylow_count: e.sylow_count,
        verdict: e.verdict,
        agree: characterizations_agree(g, h, p)?,
    })
}

/// Verdicts at p = 3 for the standard test groups.
pub fn standard_verdicts(include_large: bool) -> Result<Vec<Verdict>, Error> {
    let mut out = Vec::new();
    let sl = testbed::sl2_9();
    let slw = sl.whole();
    out.push(verdict("SL2(9)", &sl, &slw, 3)?);
    let center = slw.center(&sl);
    let psl = slw.quotient(&sl, &center);
    out.push(verdict("PSL2(9)", &psl, &Subgroup::whole(&psl), 3)?);
    let a6 = testbed::a6();
    out.push(verdict("A6", &a6, &a6.whole(), 3)?);
    let m = monomial::m12();
    let md = mathieu::mathieu();
    out.push(verdict("M0_10", &m.group, &md.m0_10, 3)?);
    out.push(verdict("M0_11 = M11", &m.group, &md.m0_11, 3)?);
    out.push(verdict("2M10", &m.group, &md.m2_10, 3)?);
    out.push(verdict("2M11", &m.group, &md.m2_11, 3)?);
    let sp = &sp4ut3::sp4().sp;
    out.push(verdict("Sp4(3)", sp, &sp.whole(), 3)?);
    if include_large {
        let aa = testbed::a6_times_a6();
        out.push(verdict("PSL2(9)xPSL2(9)", &aa, &aa.whole(), 3)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    /// (name, index, verdict on G, verdict on G0)
    pub index_pairs: Vec<(String, usize, bool, bool)>,
    /// (name, HK/K strongly embedded in G/K)
    pub quotients: Vec<(String, bool)>,
    pub product_negative: bool,
    /// for A5 × C2 × C2: J nonempty, G/K_J and some G/K_j positive
    pub g_prod: (bool, bool, bool),
    /// A6, p = 5: the witness and an overgroup A5 are both strongly 5-embedded
    pub monotone: bool,
}

fn image_in_quotient<G: FiniteGroup + ?Sized>(g: &G, big: &Subgroup, k: &Subgroup, h: &Subgroup) -> (crate::group::TableGroup, Subgroup) {
    let (label, _) = big.coset_labels(g, k);
    let q = big.quotient(g, k);
    let mut members: Vec<usize> = h.members().iter().map(|m| label[m]).collect();
    members.sort_unstable();
    members.dedup();
    let sub = Subgroup::from_members(&q, members);
    (q, sub)
}

/// HK/K strongly p-embedded in G/K, or HK = G, or p ∤ |G/K|.
fn quotient_case<G: FiniteGroup + ?Sized>(g: &G, big: &Subgroup, k: &Subgroup, p: usize) -> Result<bool, Error> {
    let e = has_strongly_p_embedded(g, big, p)?;
    let h = e.witness.ok_or_else(|| Error::Hypothesis("no strongly p-embedded subgroup".into()))?;
    let (q, hk) = image_in_quotient(g, big, k, &h);
    Ok(hk.order() == q.order() || q.order() % p != 0 || is_strongly_p_embedded(&q, &Subgroup::whole(&q), &hk, p))
}

pub fn reduction_lemma_tests(include_large: bool) -> Result<ReductionReport, Error> {
    let m = monomial::m12();
    let md = mathieu::mathieu();
    let g = &m.group;
    let mut index_pairs = Vec::new();
    for (name, big, small) in [("2M10/M0_10", &md.m2_10, &md.m0_10), ("2M11/M0_11", &md.m2_11, &md.m0_11)] {
        let normal = small.is_normal_in(g, big);
        let idx = big.order() / small.order();
        if !normal || idx % 3 == 0 {
            return Err(Error::Hypothesis(format!("{name}: not normal of index prime to 3")));
        }
        index_pairs.push((
            name.to_string(),
            idx,
            has_strongly_p_embedded(g, big, 3)?.verdict,
            has_strongly_p_embedded(g, small, 3)?.verdict,
        ));
    }
    let a6c2 = testbed::a6_times_c2();
    let w = a6c2.whole();
    let a6_in = Subgroup::generate(&a6c2, &a6c2.indices(&testbed::alternating(6, 2)));
    index_pairs.push((
        "A6xC2/A6".to_string(),
        w.order() / a6_in.order(),
        has_strongly_p_embedded(&a6c2, &w, 3)?.verdict,
        has_strongly_p_embedded(&a6c2, &a6_in, 3)?.verdict,
    ));
    let sl = testbed::sl2_9();
    let slw = sl.whole();
    let z = slw.center(&sl);
    let c2 = Subgroup::generate(&a6c2, &a6c2.indices(&[Perm::from_cycles(8, &[&[6, 7]])]));
    let quotients = vec![
        ("SL2(9)/{±I}".to_string(), quotient_case(&sl, &slw, &z, 3)?),
        ("A6xC2/C2".to_string(), quotient_case(&a6c2, &w, &c2, 3)?),
    ];
    let product_negative = if include_large {
        let aa = testbed::a6_times_a6();
        !has_strongly_p_embedded(&aa, &aa.whole(), 3)?.verdict
    } else {
        true
    };
    let g_prod = g_prod_check()?;
    let a6 = testbed::a6();
    let a6w = a6.whole();
    let e5 = has_strongly_p_embedded(&a6, &a6w, 5)?;
    let monotone = match e5.witness {
        Some(h) => {
            let fixed: Vec<usize> = (0..6).filter(|&pt| h.members().iter().all(|&x| a6.element(x).apply(pt) == pt)).collect();
            let over = fixed.first().map(|&pt| {
                Subgroup::from_members(&a6, a6w.members().iter().copied().filter(|&x| a6.element(x).apply(pt) == pt).collect())
            });
            match over {
                Some(over) => {
                    h.is_subgroup_of(&over)
                        && over.order() > h.order()
                        && is_strongly_p_embedded(&a6, &a6w, &h, 5)
                        && is_strongly_p_embedded(&a6, &a6w, &over, 5)
                }
                None => false,
            }
        }
        None => false,
    };
    Ok(ReductionReport { index_pairs, quotients, product_negative, g_prod, monotone })
}

/// G = A5 × C2 × C2 at p = 3 with K1 = A5 × C2 × 1, K2 = A5 × 1 × C2, K3 = 1 × C2 × C2.
fn g_prod_check() -> Result<(bool, bool, bool), Error> {
    let g = testbed::a5_times_v4();
    let w = g.whole();
    let a5: Vec<Perm> = testbed::alternating(5, 4);
    let t1 = Perm::from_cycles(9, &[&[5, 6]]);
    let t2 = Perm::from_cycles(9, &[&[7, 8]]);
    let mk = |gens: Vec<Perm>| Subgroup::generate(&g, &g.indices(&gens));
    let ks = [mk([a5.clone(), vec![t1.clone()]].concat()), mk([a5.clone(), vec![t2.clone()]].concat()), mk(vec![t1, t2])];
    let trivial = ks[0].intersection(&g, &ks[1]).intersection(&g, &ks[2]).order() == 1;
    if !trivial || ks.iter().any(|k| !k.is_normal_in(&g, &w)) {
        return Err(Error::Hypothesis("normal subgroups with trivial intersection".into()));
    }
    let j: Vec<&Subgroup> = ks.iter().filter(|k| k.order() % 3 != 0).collect();
    let mut kj = w.clone();
    for k in &j {
        kj = kj.intersection(&g, k);
    }
    let positive = |k: &Subgroup| -> Result<bool, Error> {
        let q = w.quotient(&g, k);
        Ok(has_strongly_p_embedded(&q, &Subgroup::whole(&q), 3)?.verdict)
    };
    let mut some_j = false;
    for k in &j {
        some_j |= positive(k)?;
    }
    Ok((!j.is_empty(), positive(&kj)?, some_j))
}

fn p_rank<G: FiniteGroup + ?Sized>(g: &G, big: &Subgroup, small: &Subgroup, p: usize) -> u32 {
    let mut gens = small.gens().to_vec();
    gens.extend(big.members().iter().map(|&x| g.pow(x, p as u64)));
    gens.sort_unstable();
    gens.dedup();
    let under = Subgroup::generate(g, &gens);
    let mut k = 0;
    let mut n = big.order() / under.order();
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

fn check_chain<G: FiniteGroup + ?Sized>(g: &G, p_sub: &Subgroup, chain: &[Subgroup], p: usize) -> Result<(), Error> {
    let last = chain.last().ok_or_else(|| Error::Hypothesis("empty chain".into()))?;
    if last != p_sub {
        return Err(Error::Hypothesis("chain does not end at P".into()));
    }
    if chain.windows(2).any(|w| !w[0].is_subgroup_of(&w[1])) {
        return Err(Error::Hypothesis("chain is not increasing".into()));
    }
    if chain.iter().any(|c| !c.is_normal_in(g, p_sub)) {
        return Err(Error::Hypothesis("chain member not normal in P".into()));
    }
    if !chain[0].is_subgroup_of(&p_sub.frattini_p(g, p)) {
        return Err(Error::Hypothesis("P0 is not contained in the Frattini subgroup".into()));
    }
    Ok(())
}

/// Order of α ∈ Aut(P) after verifying [α, P_i] ≤ P_{i−1} along the chain.
pub fn p_power_order_check<G: FiniteGroup + ?Sized>(
    g: &G,
    p_sub: &Subgroup,
    chain: &[Subgroup],
    alpha: impl Fn(usize) -> usize + Sync,
    p: usize,
) -> Result<usize, Error> {
    check_chain(g, p_sub, chain, p)?;
    let mut images: Vec<usize> = p_sub.members().iter().map(|&x| alpha(x)).collect();
    if images.iter().any(|&y| !p_sub.contains(y)) {
        return Err(Error::Hypothesis("α does not map P into P".into()));
    }
    images.sort_unstable();
    images.dedup();
    if images.len() != p_sub.order() {
        return Err(Error::Hypothesis("α is not injective".into()));
    }
    let hom = p_sub.members().iter().all(|&x| p_sub.gens().iter().all(|&y| alpha(g.mul(x, y)) == g.mul(alpha(x), alpha(y))));
    if !hom {
        return Err(Error::Hypothesis("α is not multiplicative".into()));
    }
    for w in chain.windows(2) {
        if !w[1].members().iter().all(|&x| w[0].contains(g.mul(alpha(x), g.inv(x)))) {
            return Err(Error::Hypothesis("[α, P_i] is not contained in P_(i−1)".into()));
        }
    }
    let mut current: Vec<usize> = p_sub.gens().iter().map(|&x| alpha(x)).collect();
    let mut order = 1;
    while current != p_sub.gens() {
        current = current.iter().map(|&x| alpha(x)).collect();
        order += 1;
    }
    Ok(order)
}

/// Concrete data for the non-essentiality criteria, inside an ambient group `g`.
#[derive(Clone, Debug)]
pub struct ChainDatum {
    pub s: Subgroup,
    pub p: Subgroup,
    pub chain: Vec<Subgroup>,
    pub witness: Option<usize>,
    /// subgroup of N_S(P) inducing T ≤ Aut_S(P)
    pub t: Option<Subgroup>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionKind {
    QcharP,
    FilteredA,
    FilteredB,
    FilteredC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionVerdict {
    /// all hypotheses of the criterion hold, so P is not essential
    Obstructed,
    /// the hypotheses fail; no conclusion
    Consistent,
}

pub fn essential_obstruction<G: FiniteGroup + ?Sized>(
    g: &G,
    d: &ChainDatum,
    kind: ObstructionKind,
    p: usize,
) -> Result<ObstructionVerdict, Error> {
    use ObstructionVerdict::*;
    let n = d.s.normalizer(g, &d.p);
    match kind {
        ObstructionKind::QcharP => {
            check_chain(g, &d.p, &d.chain, p)?;
            if d.chain.windows(2).any(|w| !w[0].is_normal_in(g, &w[1])) {
                return Err(Error::Hypothesis("chain is not subnormal".into()));
            }
            let x = d.witness.ok_or_else(|| Error::Hypothesis("QcharP needs a witness x".into()))?;
            if !n.contains(x) || d.p.contains(x) {
                return Err(Error::Hypothesis("witness is not in N_S(P) \\ P".into()));
            }
            let ok = d.chain.windows(2).all(|w| w[1].members().iter().all(|&y| w[0].contains(g.comm(x, y))));
            Ok(if ok { Obstructed } else { Consistent })
        }
        ObstructionKind::FilteredA | ObstructionKind::FilteredB => {
            check_chain(g, &d.p, &d.chain, p)?;
            let central = d.chain.windows(2).all(|w| {
                d.p.gens().iter().all(|&a| w[1].members().iter().all(|&b| w[0].contains(g.comm(a, b))))
            });
            if !central {
                return Err(Error::Hypothesis("[P, P_i] is not contained in P_(i−1)".into()));
            }
            let ranks: Vec<u32> = d.chain.windows(2).map(|w| p_rank(g, &w[1], &w[0], p)).collect();
            let index = n.order() / d.p.order();
            let need = if kind == ObstructionKind::FilteredA {
                if index != p {
                    return Err(Error::Hypothesis("|N_S(P)/P| ≠ p".into()));
                }
                2
            } else {
                if index < p * p {
                    return Err(Error::Hypothesis("|N_S(P)/P| < p²".into()));
                }
                4
            };
            Ok(if ranks.iter().any(|&r| r >= need) { Consistent } else { Obstructed })
        }
        ObstructionKind::FilteredC => {
            let t = d.t.as_ref().ok_or_else(|| Error::Hypothesis("filtered_c needs T".into()))?;
            if d.p.order() == d.s.order() || !t.is_subgroup_of(&n) {
                return Err(Error::Hypothesis("need P < S and T ≤ N_S(P)".into()));
            }
            let inner = d.p.join(g, &d.s.centralizer(g, d.p.gens()));
            let t_out = t.order() / t.intersection_order(&inner);
            let cp = d.p.centralizer(g, t.gens());
            let ok = t_out >= p * p && d.p.order() / cp.order() == p;
            Ok(if ok { Obstructed } else { Consistent })
        }
    }
}

/// P = C_A(η₀)⟨η₀⟩ in the M12-case S, with T induced by N_A(P).
pub fn m12_filtered_c_datum() -> ChainDatum {
    let s = pgroups::s_group(Case::M12);
    let whole = Subgroup::whole(s);
    let a = s.a_subgroup();
    let zero = SqMat::from_i64([[0; 3]; 3]);
    let eta0 = s.from_sym(&zero, &pgroups::eta(Slope::Finite(F3::ZERO)));
    let ca = a.centralizer(s, &[eta0]);
    let mut gens = ca.gens().to_vec();
    gens.push(eta0);
    let p = Subgroup::generate(s, &gens);
    let t = a.normalizer(s, &p);
    ChainDatum { s: whole, chain: vec![p.clone()], p, witness: None, t: Some(t) }
}

/// Out_A(P) for the M12 datum: order of N_A(P) modulo P·C_S(P), and [P : C_P(N_A(P))].
pub fn m12_filtered_c_numbers() -> (usize, usize) {
    let s = pgroups::s_group(Case::M12);
    let d = m12_filtered_c_datum();
    let t = d.t.expect("T");
    let inner = d.p.join(s, &d.s.centralizer(s, d.p.gens()));
    (t.order() / t.intersection_order(&inner), d.p.order() / d.p.centralizer(s, t.gens()).order())
}

/// All g with q(gv) = q(v), by backtracking over images of the standard basis.
pub fn orthogonal_group(q: &QuadraticForm) -> Vec<MatF3> {
    let n = q.dim();
    let vs = linalg::all_vectors(n);
    let basis: Vec<VecF3> = (0..n).map(|k| (0..n).map(|j| F3::new((j == k) as i64)).collect()).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<VecF3> = Vec::new();
    fn rec(q: &QuadraticForm, vs: &[VecF3], basis: &[VecF3], chosen: &mut Vec<VecF3>, out: &mut Vec<MatF3>) {
        let k = chosen.len();
        if k == basis.len() {
            out.push(MatF3::from_cols(chosen));
            return;
        }
        for v in vs {
            if q.eval(v) != q.eval(&basis[k]) {
                continue;
            }
            if (0..k).any(|j| q.polar(&chosen[j], v) != q.polar(&basis[j], &basis[k])) {
                continue;
            }
            chosen.push(v.clone());
            rec(q, vs, basis, chosen, out);
            chosen.pop();
        }
    }
    rec(q, &vs, &basis, &mut chosen, &mut out);
    out.retain(|m| m.rank() == n);
    out
}

/// x₁x₂ + x₃² + x₄² on F3⁴.
pub fn minus_type_form() -> QuadraticForm {
    QuadraticForm::new(MatF3::from_i64(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])).expect("upper triangular")
}

/// x₁x₂ + x₃² on F3³.
pub fn omega3_form() -> QuadraticForm {
    QuadraticForm::new(MatF3::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 1]])).expect("upper triangular")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl4Report {
    pub sl2_9_types: BTreeSet<Vec<usize>>,
    pub tail_anisotropic: bool,
    pub orthogonal_order: usize,
    pub core_order: usize,
    pub core_types: BTreeSet<Vec<usize>>,
    pub core_has_strongly_3_embedded: bool,
    pub omega3_types: BTreeSet<Vec<usize>>,
}

fn order3_types<const N: usize>(g: &Group<SqMat<N>>, h: &Subgroup) -> Result<BTreeSet<Vec<usize>>, Error> {
    h.elements_of_order(g, 3).iter().map(|&x| linalg::jordan_partition(&g.element(x).to_mat())).collect()
}

pub fn gl4_jordan_suite() -> Result<Gl4Report, Error> {
    let sl = testbed::sl2_9();
    let sl2_9_types = order3_types(&sl, &sl.whole())?;
    let q = minus_type_form();
    let tail_anisotropic = F3::all()
        .iter()
        .flat_map(|&a| F3::all().map(move |b| (a, b)))
        .filter(|&(a, b)| !(a.is_zero() && b.is_zero()))
        .all(|(a, b)| !q.eval(&[F3::ZERO, F3::ZERO, a, b]).is_zero());
    let o4: Vec<SqMat<4>> = orthogonal_group(&q).iter().map(SqMat::from_mat).collect();
    let g = Group::from_elements(o4.clone(), o4);
    let core = group::p_elements_closure(&g, &g.whole(), 3);
    let core_types = order3_types(&g, &core)?;
    let core_group = g.restrict(&core);
    let core_has_strongly_3_embedded = has_strongly_p_embedded(&core_group, &core_group.whole(), 3)?.verdict;
    let o3: Vec<SqMat<3>> = orthogonal_group(&omega3_form()).iter().map(SqMat::from_mat).collect();
    let g3 = Group::from_elements(o3.clone(), o3);
    let omega3_types = order3_types(&g3, &g3.whole())?;
    Ok(Gl4Report {
        sl2_9_types,
        tail_anisotropic,
        orthogonal_order: g.len(),
        core_order: core.order(),
        core_types,
        core_has_strongly_3_embedded,
        omega3_types,
    })
}

/// Random subgroups of GL3(3) generated by two Sylow 3-subgroups: count those that
/// are irreducible with 9 | order but do not contain SL3(3).
pub fn gl3_spot_check(samples: usize, seed: u64) -> (usize, usize) {
    let e = |r: usize, c: usize| {
        let mut m = [[0i64; 3]; 3];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = 1;
        }
        m[r][c] = 1;
        SqMat::<3>::from_i64(m)
    };
    let gens = vec![e(0, 1), e(1, 2), e(1, 0), e(2, 1), SqMat::from_i64([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])];
    let gl = Group::closure(&gens).expect("GL3(3)");
    let ut = gl.subgroup(&[e(0, 1), e(1, 2)]);
    let sl_order = gl.len() / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = linalg::projective_points(3);
    let mut violations = 0;
    for _ in 0..samples {
        let x = rng.gen_range(0..gl.len());
        let y = rng.gen_range(0..gl.len());
        let mut hg: Vec<usize> = ut.gens().iter().map(|&u| gl.conj(x, u)).collect();
        hg.extend(ut.gens().iter().map(|&u| gl.conj(y, u)));
        let h = Subgroup::generate(&gl, &hg);
        let mats: Vec<SqMat<3>> = hg.iter().map(|&k| *gl.element(k)).collect();
        let fixes_line = |ms: &[SqMat<3>]| {
            points.iter().any(|v| ms.iter().all(|m| linalg::normalize(&m.mul_vec(v)) == linalg::normalize(v)))
        };
        let transposed: Vec<SqMat<3>> = mats.iter().map(SqMat::transpose).collect();
        let irreducible = !fixes_line(&mats) && !fixes_line(&transposed);
        let det_one = h.members().iter().filter(|&&k| gl.element(k).det() == F3::ONE).count();
        if irreducible && h.order() % 9 == 0 && det_one != sl_order {
            violations += 1;
        }
    }
    (samples, violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylow_counts() {
        let a6 = testbed::a6();
        let sys = sylow_p(&a6, &a6.whole(), 3);
        assert_eq!((sys.count(), sys.sylow_order()), (10, 9));
        assert!(covers_p_elements(&a6, &a6.whole(), &sys));
        let sl = testbed::sl2_9();
        assert_eq!(sylow_p(&sl, &sl.whole(), 3).count(), 10);
        let m = monomial::m12();
        let s11 = sylow_p(&m.group, &mathieu::mathieu().m0_11, 3);
        assert_eq!(s11.count(), 55);
        assert_eq!(s11.count() % 3, 1);
        let e9 = Group::closure(&[Perm::from_cycles(6, &[&[0, 1, 2]]), Perm::from_cycles(6, &[&[3, 4, 5]])]).unwrap();
        assert_eq!(sylow_p(&e9, &e9.whole(), 3).count(), 1);
    }

    #[test]
    fn verdicts() {
        let v = standard_verdicts(false).unwrap();
        for r in &v {
            assert!(r.agree, "{r:?}");
            assert_eq!(r.verdict, r.name != "Sp4(3)", "{r:?}");
        }
        let a6 = testbed::a6();
        assert!(matches!(has_strongly_p_embedded(&a6, &a6.whole(), 7), Err(Error::PrimeDoesNotDivide { p: 7 })));
    }

    #[test]
    fn reductions() {
        let r = reduction_lemma_tests(false).unwrap();
        for (name, _, a, b) in &r.index_pairs {
            assert!(*a && *b, "{name}");
        }
        assert!(r.quotients.iter().all(|q| q.1), "{:?}", r.quotients);
        assert_eq!(r.g_prod, (true, true, true));
        assert!(r.monotone);
    }

    #[test]
    fn chain_order() {
        let s = pgroups::s_group(Case::M12);
        let uwq = pgroups::build_uwq(Slope::Finite(F3::ZERO));
        let z = pgroups::m12_z();
        let chain = vec![z.clone(), uwq.w.clone(), uwq.q.clone()];
        let zero = SqMat::from_i64([[0; 3]; 3]);
        let eta0 = s.from_sym(&zero, &pgroups::eta(Slope::Finite(F3::ZERO)));
        let ord = p_power_order_check(s, &uwq.q, &chain, |x| s.conj(eta0, x), 3).unwrap();
        assert_eq!(ord, 3);
        assert_eq!(p_power_order_check(s, &uwq.q, &chain, |x| x, 3).unwrap(), 1);
        let eta_inf = s.from_sym(&zero, &pgroups::eta(Slope::Infinity));
        assert!(p_power_order_check(s, &uwq.q, &chain, |x| s.conj(eta_inf, x), 3).is_err());
        let bad = vec![uwq.w.clone(), uwq.q.clone()];
        assert!(p_power_order_check(s, &uwq.q, &bad, |x| x, 3).is_err());
    }

    #[test]
    fn obstructions() {
        let s = pgroups::s_group(Case::M12);
        let z = pgroups::m12_z();
        let triv = Subgroup::trivial(s);
        let x = s.t_elem(1);
        let d = ChainDatum { s: Subgroup::whole(s), p: z.clone(), chain: vec![triv.clone(), z.clone()], witness: Some(x), t: None };
        assert_eq!(essential_obstruction(s, &d, ObstructionKind::QcharP, 3).unwrap(), ObstructionVerdict::Obstructed);
        let d_bad = ChainDatum { witness: None, ..d };
        assert!(essential_obstruction(s, &d_bad, ObstructionKind::QcharP, 3).is_err());

        let c = m12_filtered_c_datum();
        assert_eq!(essential_obstruction(s, &c, ObstructionKind::FilteredC, 3).unwrap(), ObstructionVerdict::Obstructed);
        assert_eq!(m12_filtered_c_numbers(), (9, 3));

        let s11 = pgroups::s_group(Case::M11);
        let a = s11.a_subgroup();
        let db = ChainDatum {
            s: Subgroup::whole(s11),
            p: a.clone(),
            chain: vec![Subgroup::trivial(s11), a],
            witness: None,
            t: None,
        };
        assert_eq!(essential_obstruction(s11, &db, ObstructionKind::FilteredB, 3).unwrap(), ObstructionVerdict::Consistent);
        assert!(essential_obstruction(s11, &db, ObstructionKind::FilteredA, 3).is_err());
    }

    #[test]
    fn gl4() {
        let r = gl4_jordan_suite().unwrap();
        assert_eq!(r.sl2_9_types, BTreeSet::from([vec![2, 2]]));
        assert!(r.tail_anisotropic);
        assert_eq!(r.orthogonal_order, 1440);
        assert_eq!(r.core_order, 360);
        assert_eq!(r.core_types, BTreeSet::from([vec![3, 1]]));
        assert!(r.core_has_strongly_3_embedded);
        assert_eq!(r.omega3_types, BTreeSet::from([vec![3]]));
    }

    #[test]
    fn gl3() {
        let (n, bad) = gl3_spot_check(200, 4);
        assert_eq!((n, bad), (200, 0));
    }
}
