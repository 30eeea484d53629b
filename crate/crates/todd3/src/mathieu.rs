//! The weight-12 codewords θ*₁, θ*₂, θ*₃ ∈ ⟨C_i⟩ ∩ 𝒢, the stabilizers
//! 2M11 = N(K1) and 2M10 = N(K2) of K1 = ⟨θ*₁⟩ and K2 = ⟨θ*₂, θ*₃⟩, their cores,
//! and the three Todd modules A10, A11, A11* with explicit generator actions.
//!
//! Tetracode words are identified with F9 by κ(ξ) = ξ(1) + ξ(2)·i.

use std::fmt;
use std::sync::OnceLock;

use crate::gf::{F3, F9, I, ZETA};
use crate::golay::{self, DeltaVec, SymElt};
use crate::group::{FiniteGroup, GroupElement, Subgroup};
use crate::linalg::{MatF3, SqMat, VecF3};
use crate::monomial::{self, MonMap};

pub fn kappa9_inv(x: F9) -> golay::TetraWord {
    golay::tetra_word(x.re, x.im)
}

pub fn kappa9(w: &golay::TetraWord) -> F9 {
    F9 { re: w[0], im: w[1] }
}

/// ⟨x⟩ = trs(κ⁻¹(x))
pub fn translation(x: F9) -> MonMap {
    golay::trs(&kappa9_inv(x))
}

fn tau_of(f: impl Fn(F9) -> F9) -> MonMap {
    let alpha = golay::aut_tetracode()
        .into_iter()
        .find(|a| [F9::ONE, I].iter().all(|&x| a.apply(&kappa9_inv(x)) == kappa9_inv(f(x))))
        .expect("every F3-linear map of F9 is realized in Aut(𝒯)");
    golay::tau(&alpha).expect("automorphism")
}

/// [u] = τ(multiplication by u)
pub fn scalar(u: F9) -> MonMap {
    tau_of(|x| u * x)
}

/// [φ] = τ(conjugation)
pub fn frobenius_map() -> MonMap {
    tau_of(|x| x.conj())
}

/// Generators of N̂0 = N̂1 in symbolic form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NGenerator {
    Translation(F9),
    Scalar(F9),
    Frobenius,
    Negation,
}

impl NGenerator {
    pub fn to_monmap(self) -> MonMap {
        match self {
            NGenerator::Translation(x) => translation(x),
            NGenerator::Scalar(u) => scalar(u),
            NGenerator::Frobenius => frobenius_map(),
            NGenerator::Negation => MonMap::minus_identity(),
        }
    }

    pub fn inverse(self) -> NGenerator {
        match self {
            NGenerator::Translation(x) => NGenerator::Translation(-x),
            NGenerator::Scalar(u) => NGenerator::Scalar(u.inv().expect("unit")),
            g => g,
        }
    }

    /// Every translation, every scalar, Frobenius and −Id.
    pub fn all() -> Vec<NGenerator> {
        let mut out: Vec<NGenerator> = F9::all().map(NGenerator::Translation).collect();
        out.extend(F9::nonzero().map(NGenerator::Scalar));
        out.push(NGenerator::Frobenius);
        out.push(NGenerator::Negation);
        out
    }
}

impl fmt::Display for NGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NGenerator::Translation(x) => write!(f, "<{x}>"),
            NGenerator::Scalar(u) => write!(f, "[{u}]"),
            NGenerator::Frobenius => write!(f, "[phi]"),
            NGenerator::Negation => write!(f, "-Id"),
        }
    }
}

/// θ₁, θ₂, θ₃ ∈ Sym3(F3), supported on the upper-left 2×2 block.
pub fn theta_syms() -> [SymElt; 3] {
    [
        SqMat::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 0]]),
        SqMat::from_i64([[1, -1, 0], [-1, -1, 0], [0, 0, 0]]),
        SqMat::from_i64([[1, 1, 0], [1, -1, 0], [0, 0, 0]]),
    ]
}

/// θ*ᵢ = Φ⁻¹(θᵢ).
pub fn theta_elements() -> [DeltaVec; 3] {
    theta_syms().map(|t| golay::phi().inverse(&t))
}

/// Weight-12 codewords in the span of the columns C_i.
pub fn weight12_in_column_span() -> Vec<DeltaVec> {
    let code = &golay::golay().code;
    let mut out = Vec::new();
    for k in 0..81usize {
        let v = (0..4).fold(golay::ZERO_VEC, |acc, i| {
            golay::add(&acc, &golay::scale(F3::new((k / 3usize.pow(i as u32) % 3) as i64), &golay::column(i)))
        });
        if golay::weight(&v) == 12 && code.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Column coefficients ε with θ = Σ εᵢCᵢ, when θ lies in the column span.
pub fn column_coefficients(v: &DeltaVec) -> Option<[F3; 4]> {
    let eps: [F3; 4] = std::array::from_fn(|i| v[3 * i]);
    let rebuilt = (0..4).fold(golay::ZERO_VEC, |acc, i| golay::add(&acc, &golay::scale(eps[i], &golay::column(i))));
    (rebuilt == *v).then_some(eps)
}

#[derive(Debug)]
pub struct MathieuData {
    pub theta: [DeltaVec; 3],
    /// 2M11 = N(K1)
    pub m2_11: Subgroup,
    /// 2M10 = N(K2)
    pub m2_10: Subgroup,
    /// normal closure of trs(𝒯) in 2M11
    pub m0_11: Subgroup,
    /// normal closure of trs(𝒯) in 2M10
    pub m0_10: Subgroup,
    /// pointwise stabilizers C(K1), C(K2)
    pub c_k1: Subgroup,
    pub c_k2: Subgroup,
}

fn span_contains(basis: &[DeltaVec], v: &DeltaVec) -> bool {
    let mut all = basis.to_vec();
    all.push(*v);
    golay::rank_of(&all) == golay::rank_of(basis)
}

pub fn mathieu_stabilizers() -> MathieuData {
    let m = monomial::m12();
    let g = &m.group;
    let theta = theta_elements();
    let k1 = [theta[0]];
    let k2 = [theta[1], theta[2]];
    let fixes = |x: &MonMap, basis: &[DeltaVec]| basis.iter().all(|v| x.apply(v) == *v);
    let stabilizes = |x: &MonMap, basis: &[DeltaVec]| basis.iter().all(|v| span_contains(basis, &x.apply(v)));
    let pick = |pred: &dyn Fn(&MonMap) -> bool| -> Subgroup {
        let members: Vec<usize> = (0..g.len()).filter(|&k| pred(g.element(k))).collect();
        Subgroup::from_members(g, members)
    };
    let m2_11 = pick(&|x| stabilizes(x, &k1));
    let m2_10 = pick(&|x| stabilizes(x, &k2));
    let c_k1 = pick(&|x| fixes(x, &k1));
    let c_k2 = pick(&|x| fixes(x, &k2));
    let t_gens = m.t.gens().to_vec();
    let m0_11 = m2_11.normal_closure(g, &t_gens);
    let m0_10 = m2_10.normal_closure(g, &t_gens);
    MathieuData { theta, m2_11, m2_10, m0_11, m0_10, c_k1, c_k2 }
}

pub fn mathieu() -> &'static MathieuData {
    static D: OnceLock<MathieuData> = OnceLock::new();
    D.get_or_init(mathieu_stabilizers)
}

/// Image of θ*ᵢ under g, expressed as ±θ*ⱼ: returns (j, sign).
pub fn theta_image(g: &MonMap, i: usize) -> Option<(usize, F3)> {
    let theta = theta_elements();
    let img = g.apply(&theta[i]);
    (0..3).find_map(|j| {
        if img == theta[j] {
            Some((j, F3::ONE))
        } else if img == golay::neg(&theta[j]) {
            Some((j, F3::MINUS_ONE))
        } else {
            None
        }
    })
}

/// The twelve cells of the action of [ζ], [i], [φ], −Id on θ*₁, θ*₂, θ*₃.
pub fn acttheta_table() -> Vec<(NGenerator, [Option<(usize, F3)>; 3])> {
    [NGenerator::Scalar(ZETA), NGenerator::Scalar(I), NGenerator::Frobenius, NGenerator::Negation]
        .into_iter()
        .map(|g| {
            let m = g.to_monmap();
            (g, std::array::from_fn(|i| theta_image(&m, i)))
        })
        .collect()
}

/// Expected cells: (image index, sign) for each generator and each θ*.
pub fn acttheta_expected() -> Vec<(NGenerator, [Option<(usize, F3)>; 3])> {
    let p = F3::ONE;
    let m = F3::MINUS_ONE;
    vec![
        (NGenerator::Scalar(ZETA), [Some((0, m)), Some((2, m)), Some((1, p))]),
        (NGenerator::Scalar(I), [Some((0, p)), Some((1, m)), Some((2, m))]),
        (NGenerator::Frobenius, [Some((0, p)), Some((2, p)), Some((1, p))]),
        (NGenerator::Negation, [Some((0, m)), Some((1, m)), Some((2, m))]),
    ]
}

pub fn acttheta_check() -> bool {
    acttheta_table() == acttheta_expected()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// F3 × F9 × F3
    A10,
    /// F3 × F9 × F9
    A11,
    /// F9 × F9 × F3
    A11Dual,
}

impl Shape {
    /// Which of the three slots carry F9.
    pub fn slots(self) -> [bool; 3] {
        match self {
            Shape::A10 => [false, true, false],
            Shape::A11 => [false, true, true],
            Shape::A11Dual => [true, true, false],
        }
    }

    pub fn dim(self) -> usize {
        self.slots().iter().map(|&w| if w { 2 } else { 1 }).sum()
    }
}

/// Element [a, b, c] of a Todd module; F3 slots hold elements of F3 ⊂ F9.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToddElement {
    pub a: F9,
    pub b: F9,
    pub c: F9,
}

impl ToddElement {
    pub const ZERO: ToddElement = ToddElement { a: F9::ZERO, b: F9::ZERO, c: F9::ZERO };

    pub fn new(a: F9, b: F9, c: F9) -> ToddElement {
        ToddElement { a, b, c }
    }

    pub fn add(self, o: ToddElement) -> ToddElement {
        ToddElement { a: self.a + o.a, b: self.b + o.b, c: self.c + o.c }
    }

    pub fn neg(self) -> ToddElement {
        ToddElement { a: -self.a, b: -self.b, c: -self.c }
    }

    pub fn is_valid(self, shape: Shape) -> bool {
        let s = shape.slots();
        [self.a, self.b, self.c].iter().zip(s).all(|(x, wide)| wide || x.im.is_zero())
    }

    /// F3 coordinates: F3 slots contribute one entry, F9 slots (re, im).
    pub fn to_vec(self, shape: Shape) -> VecF3 {
        let s = shape.slots();
        let mut out = Vec::new();
        for (x, wide) in [self.a, self.b, self.c].into_iter().zip(s) {
            out.push(x.re);
            if wide {
                out.push(x.im);
            }
        }
        out
    }

    pub fn from_vec(shape: Shape, v: &[F3]) -> ToddElement {
        let s = shape.slots();
        let mut k = 0;
        let mut xs = [F9::ZERO; 3];
        for (slot, wide) in s.into_iter().enumerate() {
            xs[slot] = if wide {
                k += 2;
                F9 { re: v[k - 2], im: v[k - 1] }
            } else {
                k += 1;
                F9::from_f3(v[k - 1])
            };
        }
        ToddElement { a: xs[0], b: xs[1], c: xs[2] }
    }

    pub fn all(shape: Shape) -> Vec<ToddElement> {
        crate::linalg::all_vectors(shape.dim()).iter().map(|v| ToddElement::from_vec(shape, v)).collect()
    }
}

impl fmt::Display for ToddElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

fn tr(x: F9) -> F9 {
    F9::from_f3(x.trace())
}

fn nm(x: F9) -> F9 {
    F9::from_f3(x.norm())
}

/// Action of a generator of N̂ on a Todd module.
pub fn todd_action(shape: Shape, g: NGenerator, v: ToddElement) -> ToddElement {
    let ToddElement { a, b, c } = v;
    match (shape, g) {
        (_, NGenerator::Negation) => v.neg(),
        (Shape::A10, NGenerator::Translation(x)) => ToddElement::new(a, b - a * x, c + tr(x * b.conj()) - a * nm(x)),
        (Shape::A10, NGenerator::Scalar(u)) => ToddElement::new(a, u * b, nm(u) * c),
        (Shape::A10, NGenerator::Frobenius) => ToddElement::new(a, b.conj(), c),
        (Shape::A11, NGenerator::Translation(x)) => ToddElement::new(a, b - a * x, c + b * x + a * x * x),
        (Shape::A11, NGenerator::Scalar(u)) => ToddElement::new(a, u * b, u * u * c),
        (Shape::A11, NGenerator::Frobenius) => ToddElement::new(a, b.conj(), c.conj()),
        (Shape::A11Dual, NGenerator::Translation(x)) => ToddElement::new(a, b - a * x, c + tr(b * x + a * x * x)),
        (Shape::A11Dual, NGenerator::Scalar(u)) => {
            let w = u.inv().expect("unit");
            ToddElement::new(w * w * a, w * b, c)
        }
        (Shape::A11Dual, NGenerator::Frobenius) => ToddElement::new(a.conj(), b.conj(), c),
    }
}

/// κ̃ℓ: Sym3(F3) → Aℓ for ℓ ∈ {10, 11}.
pub fn kappa_tilde(shape: Shape, x: &SymElt) -> ToddElement {
    let e = |r: usize, c: usize| F9::from_f3(x.get(r, c));
    let a = e(2, 2);
    let b = -(e(0, 2) + e(1, 2) * I);
    let c = match shape {
        // Σ X_jk·κ(e_j)·κ(e_k) with κ(e_0) = 1, κ(e_1) = i
        Shape::A11 => e(0, 0) - e(1, 1) + e(0, 1) * I * F3::new(2),
        // Σ X_jk·Tr(κ(e_j)·conj κ(e_k))
        Shape::A10 => -(e(0, 0) + e(1, 1)),
        Shape::A11Dual => panic!("A11* is not a quotient of the Golay code"),
    };
    ToddElement::new(a, b, c)
}

/// κ̃ℓ ∘ Φ on 𝒢.
pub fn quotient_map(shape: Shape, w: &DeltaVec) -> ToddElement {
    kappa_tilde(shape, &golay::phi().apply(w))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    pub image_size: usize,
    pub kernel: Vec<DeltaVec>,
    pub kernel_matches: bool,
    pub equivariant: bool,
    pub kernel_invariant: bool,
}

/// Surjectivity, kernel and equivariance of κ̃ℓ∘Φ for ℓ = 10 or 11.
pub fn quotient_equivariance(shape: Shape) -> QuotientReport {
    let code = &golay::golay().code;
    let mut images: Vec<ToddElement> = code.codewords().iter().map(|w| quotient_map(shape, w)).collect();
    let kernel: Vec<DeltaVec> = code.codewords().iter().filter(|w| quotient_map(shape, w) == ToddElement::ZERO).copied().collect();
    images.sort();
    images.dedup();
    let theta = theta_elements();
    let k: Vec<DeltaVec> = match shape {
        Shape::A11 => vec![theta[0]],
        _ => vec![theta[1], theta[2]],
    };
    let mut expected_kernel: Vec<DeltaVec> = crate::linalg::span(&k.iter().map(|v| v.to_vec()).collect::<Vec<_>>(), 12)
        .into_iter()
        .map(|v| std::array::from_fn(|i| v[i]))
        .collect();
    expected_kernel.sort();
    let mut kernel_sorted = kernel.clone();
    kernel_sorted.sort();
    let equivariant = NGenerator::all().into_iter().all(|g| {
        let m = g.to_monmap();
        code.codewords().iter().all(|w| quotient_map(shape, &m.apply(w)) == todd_action(shape, g, quotient_map(shape, w)))
    });
    let data = mathieu();
    let group = &monomial::m12().group;
    let stab = if shape == Shape::A11 { &data.m2_11 } else { &data.m2_10 };
    let kernel_invariant =
        stab.gens().iter().all(|&s| kernel.iter().all(|w| quotient_map(shape, &group.element(s).apply(w)) == ToddElement::ZERO));
    QuotientReport {
        image_size: images.len(),
        kernel_matches: kernel_sorted == expected_kernel,
        kernel,
        equivariant,
        kernel_invariant,
    }
}

/// ⟨[a,b,z], [y,c,d]⟩ = yz + Tr(ad + bc) for [a,b,z] ∈ A11* and [y,c,d] ∈ A11.
pub fn dual_pairing(xi: ToddElement, eta: ToddElement) -> F3 {
    let (a, b, z) = (xi.a, xi.b, xi.c);
    let (y, c, d) = (eta.a, eta.b, eta.c);
    (y * z).re + (a * d + b * c).trace()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    pub gram_rank: usize,
    pub adjoint: bool,
}

pub fn dual_pairing_check() -> PairingReport {
    let dual = ToddElement::all(Shape::A11Dual);
    let primal = ToddElement::all(Shape::A11);
    let unit = |shape: Shape, k: usize| {
        let mut v = vec![F3::ZERO; 5];
        v[k] = F3::ONE;
        ToddElement::from_vec(shape, &v)
    };
    let gram: Vec<VecF3> =
        (0..5).map(|r| (0..5).map(|c| dual_pairing(unit(Shape::A11Dual, r), unit(Shape::A11, c))).collect()).collect();
    let gram_rank = MatF3::from_rows(&gram).rank();
    let adjoint = NGenerator::all().into_iter().all(|g| {
        dual.iter().all(|&x| {
            let gx = todd_action(Shape::A11Dual, g, x);
            primal.iter().all(|&y| dual_pairing(gx, y) == dual_pairing(x, todd_action(Shape::A11, g.inverse(), y)))
        })
    });
    PairingReport { gram_rank, adjoint }
}

/// The subgroup T⟨gens⟩ of 2M12 for symbolic generators.
pub fn subgroup_of(gens: &[MonMap]) -> Subgroup {
    let m = monomial::m12();
    let mut all = vec![translation(F9::ONE), translation(I)];
    all.extend_from_slice(gens);
    m.group.subgroup(&all)
}

pub fn element_set(s: &Subgroup) -> Vec<u64> {
    let g = &monomial::m12().group;
    let mut v: Vec<u64> = s.members().iter().map(|&k| g.element(k).key()).collect();
    v.sort();
    v
}

/// Number of elements of order 2 in a group.
pub fn involution_count<G: FiniteGroup>(g: &G, s: &Subgroup) -> usize {
    s.members().iter().filter(|&&x| g.element_order(x) == 2).count()
}

/// The relation [u]·⟨x⟩·[u]⁻¹ = ⟨ux⟩ and [φ]⟨x⟩[φ] = ⟨x̄⟩ among the monomial maps.
pub fn monomial_relations_hold() -> bool {
    let phi = frobenius_map();
    F9::all().all(|x| {
        F9::nonzero().all(|u| scalar(u).conjugate(&translation(x)) == translation(u * x))
            && phi.conjugate(&translation(x)) == translation(x.conj())
    }) && F9::nonzero().all(|u| F9::nonzero().all(|v| scalar(u).compose(&scalar(v)) == scalar(u * v)))
        && F9::nonzero().all(|u| phi.compose(&scalar(u)).compose(&phi) == scalar(u.conj()))
}

/// Generator relations inside the formula actions, on every module element.
pub fn todd_relations_hold(shape: Shape) -> bool {
    let act = |g, v| todd_action(shape, g, v);
    ToddElement::all(shape).into_iter().all(|v| {
        F9::nonzero().all(|u| {
            F9::nonzero().all(|w| act(NGenerator::Scalar(u), act(NGenerator::Scalar(w), v)) == act(NGenerator::Scalar(u * w), v))
                && act(NGenerator::Frobenius, act(NGenerator::Scalar(u), act(NGenerator::Frobenius, v)))
                    == act(NGenerator::Scalar(u.conj()), v)
        }) && F9::all().all(|x| {
            F9::all().all(|y| {
                act(NGenerator::Translation(x), act(NGenerator::Translation(y), v)) == act(NGenerator::Translation(x + y), v)
            })
        }) && F9::all().all(|x| {
            // additivity
            let w = ToddElement::new(x, x, x);
            let w = ToddElement::from_vec(shape, &w.to_vec(shape));
            act(NGenerator::Translation(x), v.add(w)) == act(NGenerator::Translation(x), v).add(act(NGenerator::Translation(x), w))
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NHatReport {
    pub order_n_hat: usize,
    /// N ∩ 2M10 and N ∩ 2M11 both equal T⟨[ζ],[φ],−Id⟩
    pub matches_formula: bool,
    /// orders of N̂ ∩ M0_10 and N̂ ∩ M0_11
    pub core_orders: (usize, usize),
    pub core_formulas: bool,
    /// indices of N̂ in 2M10 and 2M11
    pub indices: (usize, usize),
    pub primitive: (bool, bool),
    pub t_sylow: bool,
}

pub fn n_hat_report() -> NHatReport {
    let m = monomial::m12();
    let g = &m.group;
    let d = mathieu();
    let zeta = scalar(ZETA);
    let phi = frobenius_map();
    let neg = MonMap::minus_identity();
    let formula = subgroup_of(&[zeta, phi, neg]);
    let n10 = m.n.intersection(g, &d.m2_10);
    let n11 = m.n.intersection(g, &d.m2_11);
    let c10 = n10.intersection(g, &d.m0_10);
    let c11 = n11.intersection(g, &d.m0_11);
    let f10 = subgroup_of(&[neg.compose(&scalar(I))]);
    let f11 = subgroup_of(&[neg.compose(&zeta), phi]);
    let p3 = |n: usize| crate::group::p_part(n, 3);
    NHatReport {
        order_n_hat: formula.order(),
        matches_formula: n10 == formula && n11 == formula,
        core_orders: (c10.order(), c11.order()),
        core_formulas: c10 == f10 && c11 == f11,
        indices: (d.m2_10.order() / n10.order(), d.m2_11.order() / n11.order()),
        primitive: (
            d.m2_10.is_primitive_on_cosets(g, &n10).unwrap_or(false),
            d.m2_11.is_primitive_on_cosets(g, &n11).unwrap_or(false),
        ),
        t_sylow: m.t.is_subgroup_of(&d.m2_10)
            && m.t.is_subgroup_of(&d.m2_11)
            && m.t.order() == p3(d.m2_10.order())
            && m.t.order() == p3(d.m2_11.order()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_weights_and_column_form() {
        let theta = theta_elements();
        for t in &theta {
            assert_eq!(golay::weight(t), 12);
            let eps = column_coefficients(t).unwrap();
            assert!(eps.iter().fold(F3::ZERO, |a, &b| a + b).is_zero());
        }
        let w12 = weight12_in_column_span();
        assert_eq!(w12.len(), 6);
        for t in &theta {
            assert!(w12.contains(t) && w12.contains(&golay::neg(t)));
        }
    }

    #[test]
    fn acttheta() {
        assert_eq!(acttheta_table(), acttheta_expected());
    }

    #[test]
    fn todd_examples() {
        let one = F9::ONE;
        for shape in [Shape::A10, Shape::A11, Shape::A11Dual] {
            for v in ToddElement::all(shape) {
                assert_eq!(todd_action(shape, NGenerator::Translation(F9::ZERO), v), v);
            }
        }
        let v = ToddElement::new(one, F9::ZERO, F9::ZERO);
        assert_eq!(todd_action(Shape::A10, NGenerator::Translation(one), v), ToddElement::new(one, -one, -one));
        for x in F9::all() {
            assert_eq!(todd_action(Shape::A11, NGenerator::Translation(x), v), ToddElement::new(one, -x, x * x));
        }
    }

    #[test]
    fn kernels_of_kappa_tilde() {
        let th = theta_syms();
        assert_eq!(kappa_tilde(Shape::A11, &th[0]), ToddElement::ZERO);
        assert_eq!(kappa_tilde(Shape::A10, &th[1]), ToddElement::ZERO);
        assert_eq!(kappa_tilde(Shape::A10, &th[2]), ToddElement::ZERO);
    }

    #[test]
    fn relations() {
        assert!(monomial_relations_hold());
        for shape in [Shape::A10, Shape::A11, Shape::A11Dual] {
            assert!(todd_relations_hold(shape));
        }
    }

    #[test]
    fn pairing() {
        let r = dual_pairing_check();
        assert_eq!(r.gram_rank, 5);
        assert!(r.adjoint);
        for y in ToddElement::all(Shape::A11) {
            assert!(dual_pairing(ToddElement::ZERO, y).is_zero());
        }
    }
}

#[cfg(test)]
mod group_tests {
    use super::*;

    #[test]
    fn stabilizers_and_cores() {
        let d = mathieu();
        let g = &monomial::m12().group;
        assert_eq!(d.m2_11.order(), 15840);
        assert_eq!(d.m2_10.order(), 2880);
        assert_eq!(d.m0_11.order(), 7920);
        assert_eq!(d.m0_10.order(), 360);
        assert_eq!(d.m0_11, d.c_k1);
        assert_eq!(d.m0_10, d.c_k2);
        let q11 = d.m2_11.quotient(g, &d.m0_11);
        assert_eq!(q11.order(), 2);
        let q10 = d.m2_10.quotient(g, &d.m0_10);
        let whole = Subgroup::whole(&q10);
        assert_eq!(q10.order(), 8);
        assert_eq!(involution_count(&q10, &whole), 5);
        assert!(!whole.is_abelian(&q10));
    }

    #[test]
    fn equivariance() {
        for shape in [Shape::A10, Shape::A11] {
            let r = quotient_equivariance(shape);
            assert_eq!(r.image_size, 3usize.pow(shape.dim() as u32));
            assert!(r.kernel_matches && r.equivariant && r.kernel_invariant, "{shape:?}");
        }
    }

    #[test]
    fn n_hat() {
        let r = n_hat_report();
        assert_eq!(r.order_n_hat, 288);
        assert!(r.matches_formula);
        assert_eq!(r.core_orders, (36, 144));
        assert!(r.core_formulas);
        assert_eq!(r.indices, (10, 55));
        assert_eq!(r.primitive, (true, true));
        assert!(r.t_sylow);
    }
}
