//! Monomial maps of F3^Δ, the subgroups N0 < N of the code stabilizer, and the
//! completion of N to the full monomial stabilizer 2M12 of 𝒢.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::gf::F3;
use crate::golay::{self, DeltaVec, ZERO_VEC};
use crate::group::{self, FiniteGroup, Group, GroupElement, Subgroup};
use crate::linalg::{self, MatF3, SqMat};
use crate::Error;

/// Signed permutation `e_d ↦ sign(d)·e_perm(d)`; bit d of `signs` marks sign −1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonMap {
    perm: [u8; 12],
    signs: u16,
}

impl MonMap {
    pub fn new(perm: [u8; 12], signs: u16) -> MonMap {
        let mut seen = 0u16;
        for &p in &perm {
            assert!(p < 12 && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        MonMap { perm, signs: signs & 0xfff }
    }

    pub fn identity() -> MonMap {
        MonMap { perm: std::array::from_fn(|d| d as u8), signs: 0 }
    }

    pub fn minus_identity() -> MonMap {
        MonMap { perm: std::array::from_fn(|d| d as u8), signs: 0xfff }
    }

    pub fn perm(&self) -> &[u8; 12] {
        &self.perm
    }

    pub fn signs(&self) -> u16 {
        self.signs
    }

    pub fn sign(&self, d: usize) -> F3 {
        if self.signs >> d & 1 == 1 {
            F3::MINUS_ONE
        } else {
            F3::ONE
        }
    }

    pub fn apply(&self, v: &DeltaVec) -> DeltaVec {
        let mut out = ZERO_VEC;
        for d in 0..12 {
            out[self.perm[d] as usize] = self.sign(d) * v[d];
        }
        out
    }

    /// Packed key: 4 bits per target index, then the 12 sign bits.
    pub fn key(&self) -> u64 {
        let mut k = 0u64;
        for &p in &self.perm {
            k = (k << 4) | p as u64;
        }
        (k << 12) | self.signs as u64
    }

    pub fn from_key(key: u64) -> MonMap {
        let signs = (key & 0xfff) as u16;
        let mut k = key >> 12;
        let mut perm = [0u8; 12];
        for d in (0..12).rev() {
            perm[d] = (k & 0xf) as u8;
            k >>= 4;
        }
        MonMap::new(perm, signs)
    }

    /// Whether the map permutes the columns F3 × {i}.
    pub fn permutes_columns(&self) -> bool {
        (0..4).all(|i| {
            let j = self.perm[3 * i] / 3;
            (1..3).all(|c| self.perm[3 * i + c] / 3 == j)
        })
    }
}

impl Hash for MonMap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.key());
    }
}

impl PartialOrd for MonMap {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonMap {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl GroupElement for MonMap {
    fn compose(&self, rhs: &MonMap) -> MonMap {
        let mut perm = [0u8; 12];
        let mut signs = 0u16;
        for d in 0..12 {
            let m = rhs.perm[d] as usize;
            perm[d] = self.perm[m];
            signs |= ((rhs.signs >> d & 1) ^ (self.signs >> m & 1)) << d;
        }
        MonMap { perm, signs }
    }

    fn inverse(&self) -> MonMap {
        let mut perm = [0u8; 12];
        let mut signs = 0u16;
        for d in 0..12 {
            let m = self.perm[d] as usize;
            perm[m] = d as u8;
            signs |= (self.signs >> d & 1) << m;
        }
        MonMap { perm, signs }
    }

    fn identity_like(&self) -> MonMap {
        MonMap::identity()
    }

    fn is_identity(&self) -> bool {
        self.signs == 0 && self.perm.iter().enumerate().all(|(d, &p)| d == p as usize)
    }
}

impl fmt::Display for MonMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:015x}", self.key())
    }
}

/// Breadth-first closure with the default cap.
pub fn group_closure(gens: &[MonMap]) -> Result<Group<MonMap>, Error> {
    Group::closure_with(MonMap::identity(), gens, group::DEFAULT_CAP)
}

/// Small generating set of N0: two translations and generators of τ(Aut 𝒯).
pub fn n0_small_generators() -> Vec<MonMap> {
    let taus: Vec<MonMap> = golay::aut_tetracode().iter().map(|a| golay::tau(a).expect("automorphism")).collect();
    let mut gens = vec![golay::trs(&golay::xi1()), golay::trs(&golay::xi2())];
    let mut current = group_closure(&gens).expect("small");
    for t in taus {
        if !current.contains(&t) {
            gens.push(t);
            current = group_closure(&gens).expect("small");
        }
    }
    gens
}

pub fn n_small_generators() -> Vec<MonMap> {
    let mut gens = n0_small_generators();
    gens.push(MonMap::minus_identity());
    gens
}

/// Depth-first search over signed images of the coordinates, pruning as soon as
/// a codeword's support has been fully assigned and its image is not in 𝒢.
/// Returns the first complete code automorphism rejected by `skip`.
pub fn stabilizer_search(skip: impl Fn(&MonMap) -> bool) -> Option<MonMap> {
    let code = &golay::golay().code;
    // one codeword per ± pair, grouped by the last coordinate of its support
    let mut checks: Vec<Vec<DeltaVec>> = vec![Vec::new(); 12];
    for w in code.codewords() {
        let Some(last) = (0..12).rev().find(|&d| !w[d].is_zero()) else { continue };
        if w.iter().find(|x| !x.is_zero()) == Some(&F3::ONE) {
            checks[last].push(*w);
        }
    }
    let mut perm = [0u8; 12];
    let mut signs = 0u16;
    let mut used = 0u16;
    dfs(0, &mut perm, &mut signs, &mut used, &checks, &skip)
}

fn dfs(
    depth: usize,
    perm: &mut [u8; 12],
    signs: &mut u16,
    used: &mut u16,
    checks: &[Vec<DeltaVec>],
    skip: &impl Fn(&MonMap) -> bool,
) -> Option<MonMap> {
    let code = &golay::golay().code;
    if depth == 12 {
        let m = MonMap { perm: *perm, signs: *signs };
        return (!skip(&m)).then_some(m);
    }
    for target in 0..12u8 {
        if *used >> target & 1 == 1 {
            continue;
        }
        for neg in [false, true] {
            perm[depth] = target;
            if neg {
                *signs |= 1 << depth;
            } else {
                *signs &= !(1 << depth);
            }
            let ok = checks[depth].iter().all(|w| {
                let mut img = ZERO_VEC;
                for d in 0..=depth {
                    if !w[d].is_zero() {
                        let s = if *signs >> d & 1 == 1 { F3::MINUS_ONE } else { F3::ONE };
                        img[perm[d] as usize] = s * w[d];
                    }
                }
                code.contains(&img)
            });
            if ok {
                *used |= 1 << target;
                if let Some(m) = dfs(depth + 1, perm, signs, used, checks, skip) {
                    return Some(m);
                }
                *used &= !(1 << target);
            }
        }
    }
    *signs &= !(1 << depth);
    None
}

/// 2M12 together with its distinguished subgroups, as index subgroups.
#[derive(Debug)]
pub struct M12Data {
    pub group: Group<MonMap>,
    /// trs(𝒯)
    pub t: Subgroup,
    pub n0: Subgroup,
    pub n: Subgroup,
    /// The element found by the stabilizer search.
    pub extra: MonMap,
}

/// Complete N to the full stabilizer of 𝒢 in the monomial group.
pub fn extend_to_2m12() -> Result<M12Data, Error> {
    let extra = stabilizer_search(|m| m.permutes_columns())
        .ok_or_else(|| Error::SearchFailed("no code automorphism outside N".into()))?;
    let mut gens = n_small_generators();
    gens.push(extra);
    let group = group_closure(&gens)?;
    let t = group.subgroup(&[golay::trs(&golay::xi1()), golay::trs(&golay::xi2())]);
    let n0 = group.subgroup(&n0_small_generators());
    let n = group.subgroup(&n_small_generators());
    Ok(M12Data { group, t, n0, n, extra })
}

pub fn m12() -> &'static M12Data {
    static M: OnceLock<M12Data> = OnceLock::new();
    M.get_or_init(|| extend_to_2m12().expect("2M12 exists"))
}

/// Normalized representatives of the 364 points of P(𝒢).
pub fn projective_codewords() -> Vec<DeltaVec> {
    golay::golay()
        .code
        .codewords()
        .iter()
        .filter(|w| w.iter().find(|x| !x.is_zero()) == Some(&F3::ONE))
        .copied()
        .collect()
}

pub fn normalize_codeword(w: &DeltaVec) -> DeltaVec {
    match w.iter().find(|x| !x.is_zero()) {
        Some(&lead) => golay::scale(lead, w),
        None => *w,
    }
}

/// Sorted orbit lengths of ⟨gens⟩ on P(𝒢).
pub fn orbit_lengths_on_projective(gens: &[MonMap]) -> Vec<usize> {
    let pts = projective_codewords();
    let mut lens: Vec<usize> =
        group::orbits(gens, &pts, |g, w| normalize_codeword(&g.apply(w))).iter().map(|o| o.len()).collect();
    lens.sort();
    lens
}

/// Whether `g` acts primitively on the cosets of `h`.
pub fn is_maximal_by_primitivity<G: FiniteGroup>(g: &G, big: &Subgroup, h: &Subgroup) -> Result<bool, Error> {
    big.is_primitive_on_cosets(g, h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order3Class {
    pub representative: MonMap,
    pub size: usize,
    pub partition: Vec<usize>,
    pub fixed_rank: usize,
}

/// Conjugacy classes of elements of order 3 in 2M12 with their Jordan
/// partitions on 𝒢.
pub fn order3_class_data(m: &M12Data) -> Vec<Order3Class> {
    let g = &m.group;
    let order3: Vec<usize> = (0..g.len())
        .filter(|&k| {
            let x = g.element(k);
            !x.is_identity() && x.compose(x).compose(x).is_identity()
        })
        .collect();
    let gens = g.indices(g.generators());
    let phi = golay::phi();
    let mut out: Vec<Order3Class> = group::conjugacy_classes(g, &gens, &order3)
        .into_iter()
        .map(|cls| {
            let rep = *g.element(*cls.iter().min_by_key(|&&k| g.element(k).key()).expect("nonempty"));
            let mat = phi.matrix_of(&rep);
            let partition = linalg::jordan_partition(&mat).expect("order 3 is unipotent");
            let fixed_rank = (&mat - &MatF3::identity(6)).kernel().len();
            Order3Class { representative: rep, size: cls.len(), partition, fixed_rank }
        })
        .collect();
    out.sort_by_key(|c| c.size);
    out
}

/// Jordan partition on 𝒢 of Θ⁻¹(m).
pub fn theta_inv_partition(m: [[i64; 3]; 3]) -> Option<Vec<usize>> {
    let b = golay::theta_inv(&SqMat::from_i64(m))?;
    linalg::jordan_partition(&golay::phi().matrix_of(&b)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_roundtrip_and_composition() {
        let g = golay::trs(&golay::xi1()).compose(&MonMap::minus_identity());
        assert_eq!(MonMap::from_key(g.key()), g);
        let h = golay::tau(&golay::aut_tetracode()[5]).unwrap();
        let v = golay::golay().code.codewords()[100];
        assert_eq!(g.compose(&h).apply(&v), g.apply(&h.apply(&v)));
        assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn small_closures() {
        assert_eq!(group_closure(&[MonMap::identity()]).unwrap().len(), 1);
        let t = group_closure(&[golay::trs(&golay::xi1()), golay::trs(&golay::xi2())]).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(group_closure(&n0_small_generators()).unwrap().len(), 432);
        assert_eq!(group_closure(&n_small_generators()).unwrap().len(), 864);
        assert_eq!(group_closure(&golay::n0_generators()).unwrap().len(), 432);
    }

    #[test]
    fn trivial_group_orbits() {
        assert_eq!(orbit_lengths_on_projective(&[MonMap::identity()]), vec![1; 364]);
    }

    #[test]
    fn theta_partitions() {
        assert_eq!(theta_inv_partition([[1, 0, 1], [0, 1, 0], [0, 0, 1]]), Some(vec![3, 2, 1]));
        assert_eq!(theta_inv_partition([[1, 1, 0], [0, 1, 1], [0, 0, 1]]), Some(vec![3, 3]));
    }

    #[test]
    fn search_finds_element_outside_n() {
        let x = stabilizer_search(|m| m.permutes_columns()).unwrap();
        assert!(!x.permutes_columns());
        for b in golay::golay().code.basis() {
            assert!(golay::golay().code.contains(&x.apply(b)));
        }
    }
}
