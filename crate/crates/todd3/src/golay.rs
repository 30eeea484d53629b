//! The tetracode 𝒯 ⊂ F3⁴, the ternary Golay code 𝒢 ⊂ F3^Δ with Δ = F3 × {1,2,3,4},
//! the 7-dimensional code 𝒢̄ = 𝒢 + ⟨e_Δ⟩, the isomorphism Φ: 𝒢 → Sym3(F3) and
//! the isomorphism Θ from N0 = trs(𝒯) ⋊ τ(Aut 𝒯) onto the affine group of F3².
//!
//! Coordinates: `(c, i)` with column `i ∈ 0..4` sits at index `3i + c`.
//! Tetracode words are identified with F3² by restriction to the first two
//! coordinates.

use std::sync::OnceLock;

use crate::gf::F3;
use crate::group::GroupElement;
use crate::linalg::{MatF3, SqMat, VecF3};
use crate::monomial::MonMap;
use crate::Error;

pub type DeltaVec = [F3; 12];
pub type TetraWord = [F3; 4];
/// Symmetric 3×3 matrix, an element of A = Sym3(F3).
pub type SymElt = SqMat<3>;

pub const ZERO_VEC: DeltaVec = [F3::ZERO; 12];

pub fn idx(c: F3, i: usize) -> usize {
    3 * i + c.value() as usize
}

pub fn tetra_word(a: F3, b: F3) -> TetraWord {
    [a, b, b + a, b + a + a]
}

/// The nine tetracode words, ordered by (a, b) with a varying fastest.
pub fn tetracode() -> Vec<TetraWord> {
    let mut out = Vec::with_capacity(9);
    for b in F3::all() {
        for a in F3::all() {
            out.push(tetra_word(a, b));
        }
    }
    out
}

pub fn is_tetra(w: &TetraWord) -> bool {
    *w == tetra_word(w[0], w[1])
}

pub fn kappa(w: &TetraWord) -> [F3; 2] {
    [w[0], w[1]]
}

pub fn kappa_inv(v: [F3; 2]) -> TetraWord {
    tetra_word(v[0], v[1])
}

pub fn add(v: &DeltaVec, w: &DeltaVec) -> DeltaVec {
    std::array::from_fn(|k| v[k] + w[k])
}

pub fn sub(v: &DeltaVec, w: &DeltaVec) -> DeltaVec {
    std::array::from_fn(|k| v[k] - w[k])
}

pub fn scale(s: F3, v: &DeltaVec) -> DeltaVec {
    std::array::from_fn(|k| s * v[k])
}

pub fn neg(v: &DeltaVec) -> DeltaVec {
    scale(F3::MINUS_ONE, v)
}

pub fn dot(v: &DeltaVec, w: &DeltaVec) -> F3 {
    crate::linalg::dot(v, w)
}

pub fn weight(v: &DeltaVec) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Ternary string in coordinate order.
pub fn render(v: &DeltaVec) -> String {
    v.iter().map(|x| char::from(b'0' + x.value())).collect()
}

/// Column vector C_i (column `i ∈ 0..4`).
pub fn column(i: usize) -> DeltaVec {
    let mut v = ZERO_VEC;
    for c in F3::all() {
        v[idx(c, i)] = F3::ONE;
    }
    v
}

/// Gr(ξ) = Σ_i e_(ξ(i), i).
pub fn graph(xi: &TetraWord) -> DeltaVec {
    let mut v = ZERO_VEC;
    for (i, &c) in xi.iter().enumerate() {
        v[idx(c, i)] = F3::ONE;
    }
    v
}

pub fn all_ones() -> DeltaVec {
    [F3::ONE; 12]
}

#[derive(Clone, Debug)]
pub struct GolayCode {
    basis: [DeltaVec; 6],
    codewords: Vec<DeltaVec>,
}

impl GolayCode {
    /// Basis {C1−C2, C1−C3, C1−C4, Gr(ξ1)−Gr(0), Gr(ξ2)−Gr(0), C1+Gr(0)}.
    pub fn basis(&self) -> &[DeltaVec; 6] {
        &self.basis
    }

    /// All 729 codewords; entry k is Σ_j k_j·b_j for the base-3 digits k_j of k.
    pub fn codewords(&self) -> &[DeltaVec] {
        &self.codewords
    }

    /// Membership via inner products with the basis (𝒢 is self-dual).
    pub fn contains(&self, v: &DeltaVec) -> bool {
        self.basis.iter().all(|b| dot(b, v).is_zero())
    }

    pub fn weight_enumerator(&self) -> [usize; 13] {
        let mut out = [0; 13];
        for w in &self.codewords {
            out[weight(w)] += 1;
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Golay {
    pub code: GolayCode,
    /// Basis {C1, C2, C3, C4, Gr(ξ1), Gr(ξ2), Gr(0)} of 𝒢̄.
    pub bar_basis: Vec<DeltaVec>,
}

pub fn xi1() -> TetraWord {
    tetra_word(F3::ONE, F3::ZERO)
}

pub fn xi2() -> TetraWord {
    tetra_word(F3::ZERO, F3::ONE)
}

pub fn build_golay() -> Golay {
    let g0 = graph(&[F3::ZERO; 4]);
    let c = |i| column(i);
    let basis = [
        sub(&c(0), &c(1)),
        sub(&c(0), &c(2)),
        sub(&c(0), &c(3)),
        sub(&graph(&xi1()), &g0),
        sub(&graph(&xi2()), &g0),
        add(&c(0), &g0),
    ];
    let mut codewords = Vec::with_capacity(729);
    for k in 0..729usize {
        let mut v = ZERO_VEC;
        let mut m = k;
        for b in &basis {
            v = add(&v, &scale(F3::new((m % 3) as i64), b));
            m /= 3;
        }
        codewords.push(v);
    }
    let bar_basis = vec![c(0), c(1), c(2), c(3), graph(&xi1()), graph(&xi2()), g0];
    Golay { code: GolayCode { basis, codewords }, bar_basis }
}

/// Shared instance.
pub fn golay() -> &'static Golay {
    static G: OnceLock<Golay> = OnceLock::new();
    G.get_or_init(build_golay)
}

pub fn rank_of(vs: &[DeltaVec]) -> usize {
    let rows: Vec<VecF3> = vs.iter().map(|v| v.to_vec()).collect();
    MatF3::from_rows(&rows).rank()
}

/// Gr(ξ)+Gr(η)+Gr(θ) = Σ_{i: ξ(i)≠η(i)} C_i for θ = −ξ−η, checked on all 81 pairs.
pub fn check_graph_relation() -> bool {
    let t = tetracode();
    t.iter().all(|xi| t.iter().all(|eta| graph_relation_holds(xi, eta)))
}

pub fn graph_relation_holds(xi: &TetraWord, eta: &TetraWord) -> bool {
    let theta: TetraWord = std::array::from_fn(|i| -xi[i] - eta[i]);
    let lhs = add(&add(&graph(xi), &graph(eta)), &graph(&theta));
    let rhs = (0..4).filter(|&i| xi[i] != eta[i]).fold(ZERO_VEC, |acc, i| add(&acc, &column(i)));
    lhs == rhs
}

/// `v·wᵀ` for v, w ∈ F3³, symmetrized.
pub fn sym_outer(v: [F3; 3], w: [F3; 3]) -> SymElt {
    let mut m = [[0u8; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            // (v wᵀ + w vᵀ)/2, and 1/2 = −1 in F3
            m[r][c] = (-(v[r] * w[c] + w[r] * v[c])).value();
        }
    }
    SqMat(m)
}

pub fn sym_square(v: [F3; 3]) -> SymElt {
    sym_outer(v, v)
}

/// Coordinates (m00, m01, m02, m11, m12, m22).
pub fn sym_to_vec(m: &SymElt) -> [F3; 6] {
    [m.get(0, 0), m.get(0, 1), m.get(0, 2), m.get(1, 1), m.get(1, 2), m.get(2, 2)]
}

pub fn vec_to_sym(v: &[F3]) -> SymElt {
    let e = |k: usize| v[k].value();
    SqMat([[e(0), e(1), e(2)], [e(1), e(3), e(4)], [e(2), e(4), e(5)]])
}

pub fn sym_index(m: &SymElt) -> usize {
    crate::linalg::vector_index(&sym_to_vec(m))
}

pub fn sym_from_index(k: usize) -> SymElt {
    vec_to_sym(&crate::linalg::vector_from_index(k, 6))
}

pub fn sym_add(a: &SymElt, b: &SymElt) -> SymElt {
    let mut m = [[0u8; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            m[r][c] = (a.0[r][c] + b.0[r][c]) % 3;
        }
    }
    SqMat(m)
}

/// `M·X·Mᵀ`
pub fn congruence(m: &SqMat<3>, x: &SymElt) -> SymElt {
    m.mul(x).mul(&m.transpose())
}

/// λ(i): the tetracode word vanishing at column `i` whose first nonzero entry
/// is 1, possibly negated per `signs`.
pub fn lambda(i: usize, negate: bool) -> TetraWord {
    let w = tetracode()
        .into_iter()
        .find(|w| w[i].is_zero() && w.iter().find(|x| !x.is_zero()) == Some(&F3::ONE))
        .expect("tetracode word vanishing at i");
    if negate {
        w.map(|x| -x)
    } else {
        w
    }
}

/// Φ̄: 𝒢̄ → Sym3(F3), defined on C_i and Gr(ξ) and extended linearly.
#[derive(Clone, Debug)]
pub struct PhiBar {
    /// Pivot columns of the RREF of the 𝒢̄ basis.
    pivots: Vec<usize>,
    /// Φ̄ of the RREF rows.
    row_images: Vec<[F3; 6]>,
    rref_rows: Vec<VecF3>,
}

impl PhiBar {
    /// Build with λ(i) negated for every `i` with bit i of `sign_mask` set.
    pub fn new(sign_mask: u8) -> PhiBar {
        let g = golay();
        let mut images: Vec<SymElt> = (0..4)
            .map(|i| {
                let l = kappa(&lambda(i, sign_mask >> i & 1 == 1));
                sym_square([l[0], l[1], F3::ZERO])
            })
            .collect();
        for xi in [xi1(), xi2(), [F3::ZERO; 4]] {
            let k = kappa(&xi);
            images.push(sym_square([k[0], k[1], F3::ONE]));
        }
        // Row-reduce [basis | I] to express RREF rows in the basis.
        let n = g.bar_basis.len();
        let mut aug = MatF3::zero(n, 12 + n);
        for (r, b) in g.bar_basis.iter().enumerate() {
            for c in 0..12 {
                aug.set(r, c, b[c]);
            }
            aug.set(r, 12 + r, F3::ONE);
        }
        let (red, piv) = aug.rref();
        let pivots: Vec<usize> = piv.into_iter().filter(|&c| c < 12).collect();
        assert_eq!(pivots.len(), n, "bar basis is independent");
        let mut row_images = Vec::new();
        let mut rref_rows = Vec::new();
        for r in 0..n {
            let mut acc = [F3::ZERO; 6];
            for k in 0..n {
                let t = red.get(r, 12 + k);
                let img = sym_to_vec(&images[k]);
                for j in 0..6 {
                    acc[j] += t * img[j];
                }
            }
            row_images.push(acc);
            rref_rows.push((0..12).map(|c| red.get(r, c)).collect());
        }
        PhiBar { pivots, row_images, rref_rows }
    }

    /// Φ̄(v), or `None` when v ∉ 𝒢̄.
    pub fn apply(&self, v: &DeltaVec) -> Option<SymElt> {
        let mut residual: VecF3 = v.to_vec();
        let mut acc = [F3::ZERO; 6];
        for (r, &p) in self.pivots.iter().enumerate() {
            let l = residual[p];
            if l.is_zero() {
                continue;
            }
            for c in 0..12 {
                residual[c] = residual[c] - l * self.rref_rows[r][c];
            }
            for j in 0..6 {
                acc[j] += l * self.row_images[r][j];
            }
        }
        residual.iter().all(|x| x.is_zero()).then(|| vec_to_sym(&acc))
    }
}

/// Φ = Φ̄ restricted to 𝒢, with a precomputed inverse.
#[derive(Clone, Debug)]
pub struct Phi {
    bar: PhiBar,
    /// Φ⁻¹ of the six coordinate matrices in (m00, m01, m02, m11, m12, m22) order.
    inverse_basis: [DeltaVec; 6],
}

impl Phi {
    pub fn new() -> Phi {
        let bar = PhiBar::new(0);
        let g = golay();
        let mut inverse_basis = [ZERO_VEC; 6];
        let mut found = [false; 6];
        for w in g.code.codewords() {
            let v = sym_to_vec(&bar.apply(w).expect("𝒢 ⊂ 𝒢̄"));
            if let Some(j) = (0..6).find(|&j| (0..6).all(|k| v[k] == if k == j { F3::ONE } else { F3::ZERO })) {
                inverse_basis[j] = *w;
                found[j] = true;
            }
        }
        assert!(found.iter().all(|&f| f), "Φ is onto Sym3");
        Phi { bar, inverse_basis }
    }

    pub fn bar(&self) -> &PhiBar {
        &self.bar
    }

    pub fn apply(&self, v: &DeltaVec) -> SymElt {
        self.bar.apply(v).expect("argument lies in 𝒢̄")
    }

    pub fn inverse(&self, x: &SymElt) -> DeltaVec {
        let v = sym_to_vec(x);
        (0..6).fold(ZERO_VEC, |acc, j| add(&acc, &scale(v[j], &self.inverse_basis[j])))
    }

    /// Matrix of a code automorphism on 𝒢 in Sym3 coordinates (columns are images).
    pub fn matrix_of(&self, g: &MonMap) -> MatF3 {
        let cols: Vec<VecF3> = self.inverse_basis.iter().map(|w| sym_to_vec(&self.apply(&g.apply(w))).to_vec()).collect();
        MatF3::from_cols(&cols)
    }

    /// Action of a code automorphism transported to Sym3(F3).
    pub fn transport(&self, g: &MonMap, x: &SymElt) -> SymElt {
        self.apply(&g.apply(&self.inverse(x)))
    }
}

impl Default for Phi {
    fn default() -> Self {
        Phi::new()
    }
}

pub fn phi() -> &'static Phi {
    static P: OnceLock<Phi> = OnceLock::new();
    P.get_or_init(Phi::new)
}

/// A monomial map of F3^I: e_i ↦ ε_i·e_σ(i).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonI {
    pub sigma: [u8; 4],
    pub eps: [F3; 4],
}

impl MonI {
    pub fn apply(&self, w: &TetraWord) -> TetraWord {
        let mut out = [F3::ZERO; 4];
        for i in 0..4 {
            out[self.sigma[i] as usize] = self.eps[i] * w[i];
        }
        out
    }

    /// Matrix on 𝒯 in the coordinates κ.
    pub fn kappa_matrix(&self) -> SqMat<2> {
        let c1 = kappa(&self.apply(&xi1()));
        let c2 = kappa(&self.apply(&xi2()));
        SqMat([[c1[0].value(), c2[0].value()], [c1[1].value(), c2[1].value()]])
    }
}

fn permutations4() -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    let mut s = p;
                    s.sort();
                    if s == [0, 1, 2, 3] {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// All 384 monomial maps of F3^I.
pub fn all_mon_i() -> Vec<MonI> {
    let mut out = Vec::new();
    for sigma in permutations4() {
        for mask in 0..16u8 {
            let eps = std::array::from_fn(|i| if mask >> i & 1 == 1 { F3::MINUS_ONE } else { F3::ONE });
            out.push(MonI { sigma, eps });
        }
    }
    out
}

/// Aut(𝒯): the monomial maps preserving the tetracode.
pub fn aut_tetracode() -> Vec<MonI> {
    let t = tetracode();
    all_mon_i().into_iter().filter(|a| t.iter().all(|w| is_tetra(&a.apply(w)))).collect()
}

/// Translation e_(c,i) ↦ e_(c+η(i), i).
pub fn trs(eta: &TetraWord) -> MonMap {
    let mut perm = [0u8; 12];
    for i in 0..4 {
        for c in F3::all() {
            perm[idx(c, i)] = idx(c + eta[i], i) as u8;
        }
    }
    MonMap::new(perm, 0)
}

/// τ(α): e_(c,i) ↦ e_(ε_i·c, σ(i)); rejects α ∉ Aut(𝒯).
pub fn tau(alpha: &MonI) -> Result<MonMap, Error> {
    if !tetracode().iter().all(|w| is_tetra(&alpha.apply(w))) {
        return Err(Error::NotTetracodePreserving);
    }
    let mut perm = [0u8; 12];
    for i in 0..4 {
        for c in F3::all() {
            perm[idx(c, i)] = idx(alpha.eps[i] * c, alpha.sigma[i] as usize) as u8;
        }
    }
    Ok(MonMap::new(perm, 0))
}

/// Generators of N0 = trs(𝒯) ⋊ τ(Aut 𝒯).
pub fn n0_generators() -> Vec<MonMap> {
    let mut gens = vec![trs(&xi1()), trs(&xi2())];
    gens.extend(aut_tetracode().iter().map(|a| tau(a).expect("automorphism")));
    gens
}

/// Θ(trs(η)·τ(α)) = [[A, κ(η)], [0, 1]] with A the matrix of α on 𝒯.
/// Returns `None` for maps outside N0.
pub fn theta(beta: &MonMap) -> Option<SqMat<3>> {
    if beta.signs() != 0 {
        return None;
    }
    let mut sigma = [0u8; 4];
    let mut eta = [F3::ZERO; 4];
    let mut eps = [F3::ONE; 4];
    for i in 0..4 {
        let img0 = beta.perm()[idx(F3::ZERO, i)] as usize;
        let img1 = beta.perm()[idx(F3::ONE, i)] as usize;
        let j = img0 / 3;
        if img1 / 3 != j {
            return None;
        }
        sigma[i] = j as u8;
        eta[j] = F3::new((img0 % 3) as i64);
        eps[i] = F3::new((img1 % 3) as i64) - eta[j];
    }
    let alpha = MonI { sigma, eps };
    if !is_tetra(&eta) || eps.iter().any(|e| e.is_zero()) {
        return None;
    }
    let rebuilt = trs(&eta).compose(&tau(&alpha).ok()?);
    if rebuilt != *beta {
        return None;
    }
    let a = alpha.kappa_matrix();
    let v = kappa(&eta);
    Some(SqMat([[a.0[0][0], a.0[0][1], v[0].value()], [a.0[1][0], a.0[1][1], v[1].value()], [0, 0, 1]]))
}

/// Θ⁻¹ of an affine matrix [[A, v], [0, 1]] with A ∈ GL2(3).
pub fn theta_inv(m: &SqMat<3>) -> Option<MonMap> {
    if m.0[2] != [0, 0, 1] {
        return None;
    }
    let a = SqMat([[m.0[0][0], m.0[0][1]], [m.0[1][0], m.0[1][1]]]);
    let alpha = aut_tetracode().into_iter().find(|al| al.kappa_matrix() == a)?;
    let eta = kappa_inv([F3::new(m.0[0][2] as i64), F3::new(m.0[1][2] as i64)]);
    Some(trs(&eta).compose(&tau(&alpha).ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetracode_facts() {
        let t = tetracode();
        assert_eq!(t.len(), 9);
        assert!(t.contains(&[F3::ZERO; 4]));
        assert!(t.contains(&[F3::ONE, F3::ZERO, F3::ONE, F3::new(2)]));
        let weights: Vec<usize> = t.iter().map(|w| w.iter().filter(|x| !x.is_zero()).count()).collect();
        assert_eq!(weights.iter().filter(|&&w| w == 0).count(), 1);
        assert_eq!(weights.iter().filter(|&&w| w == 3).count(), 8);
        for a in &t {
            for b in &t {
                let s: TetraWord = std::array::from_fn(|i| a[i] + b[i]);
                assert!(is_tetra(&s));
            }
        }
    }

    #[test]
    fn dimensions_and_self_duality() {
        let g = golay();
        assert_eq!(rank_of(g.code.basis()), 6);
        assert_eq!(rank_of(&g.bar_basis), 7);
        for a in g.code.basis() {
            for b in g.code.basis() {
                assert!(dot(a, b).is_zero());
            }
        }
        assert!(!g.code.contains(&all_ones()));
        let mut ext = g.code.basis().to_vec();
        ext.push(all_ones());
        assert_eq!(rank_of(&ext), 7);
        // 𝒢 ⊂ 𝒢̄
        let mut both = g.bar_basis.clone();
        both.extend_from_slice(g.code.basis());
        assert_eq!(rank_of(&both), 7);
    }

    #[test]
    fn weight_enumerator() {
        let w = golay().code.weight_enumerator();
        let mut expected = [0; 13];
        expected[0] = 1;
        expected[6] = 264;
        expected[9] = 440;
        expected[12] = 24;
        assert_eq!(w, expected);
        let mut sorted = golay().code.codewords().to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 729);
    }

    #[test]
    fn graph_relation() {
        assert!(check_graph_relation());
        let xi = [F3::ONE, F3::ZERO, F3::ONE, F3::new(2)];
        let theta: TetraWord = xi.map(|x| -x);
        let lhs = add(&add(&graph(&xi), &graph(&[F3::ZERO; 4])), &graph(&theta));
        assert_eq!(lhs, add(&add(&column(0), &column(2)), &column(3)));
    }

    #[test]
    fn phi_values() {
        let p = phi();
        assert_eq!(p.apply(&ZERO_VEC), SqMat([[0; 3]; 3]));
        assert_eq!(p.apply(&column(0)), SqMat([[0, 0, 0], [0, 1, 0], [0, 0, 0]]));
        assert_eq!(p.apply(&graph(&[F3::ZERO; 4])), SqMat([[0, 0, 0], [0, 0, 0], [0, 0, 1]]));
        assert_eq!(p.apply(&all_ones()), SqMat([[0; 3]; 3]));
        assert_eq!(lambda(0, false), [F3::ZERO, F3::ONE, F3::ONE, F3::ONE]);
    }

    #[test]
    fn phi_is_bijective_and_lambda_independent() {
        let p = phi();
        let mut images: Vec<SymElt> = golay().code.codewords().iter().map(|w| p.apply(w)).collect();
        for w in golay().code.codewords() {
            assert_eq!(p.inverse(&p.apply(w)), *w);
        }
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 729);
        for mask in 1..16u8 {
            let other = PhiBar::new(mask);
            for w in golay().code.codewords() {
                assert_eq!(other.apply(w), p.bar().apply(w));
            }
        }
    }

    #[test]
    fn phi_bar_respects_all_graphs() {
        let p = phi();
        for xi in tetracode() {
            let k = kappa(&xi);
            assert_eq!(p.apply(&graph(&xi)), sym_square([k[0], k[1], F3::ONE]));
        }
    }

    #[test]
    fn aut_tetracode_order() {
        assert_eq!(aut_tetracode().len(), 48);
        let bad = all_mon_i().into_iter().find(|a| !aut_tetracode().contains(a)).unwrap();
        assert_eq!(tau(&bad), Err(Error::NotTetracodePreserving));
    }

    #[test]
    fn translations_and_tau() {
        let t = tetracode();
        for eta in &t {
            let m = trs(eta);
            for th in &t {
                let s: TetraWord = std::array::from_fn(|i| th[i] + eta[i]);
                assert_eq!(m.apply(&graph(th)), graph(&s));
            }
            for i in 0..4 {
                assert_eq!(m.apply(&column(i)), column(i));
            }
        }
        assert!(trs(&[F3::ZERO; 4]).is_identity());
        for a in aut_tetracode() {
            let m = tau(&a).unwrap();
            for th in &t {
                assert_eq!(m.apply(&graph(th)), graph(&a.apply(th)));
            }
            for i in 0..4 {
                assert_eq!(m.apply(&column(i)), column(a.sigma[i] as usize));
            }
        }
    }

    #[test]
    fn theta_roundtrip() {
        assert_eq!(theta(&MonMap::identity()), Some(SqMat::identity()));
        for a in aut_tetracode() {
            for eta in tetracode() {
                let b = trs(&eta).compose(&tau(&a).unwrap());
                let m = theta(&b).unwrap();
                assert_eq!(theta_inv(&m), Some(b));
            }
        }
        assert_eq!(theta(&MonMap::minus_identity()), None);
    }
}
