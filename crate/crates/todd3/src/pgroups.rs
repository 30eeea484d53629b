//! Fully enumerated 3-groups S = A ⋊ T.
//!
//! Four cases: A = Sym3(F3) with T = UT3(3) acting by congruence, and the three
//! Todd modules A10, A11, A11* with T ≅ F9 acting by translations ⟨x⟩.
//! Elements are encoded as `a * |T| + t`.

use std::sync::OnceLock;

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::error::Error;
use crate::gf::{F3, F9, I};
use crate::golay::{self, SymElt};
use crate::group::{FiniteGroup, Subgroup, TableGroup};
use crate::linalg::{self, MatF3, SqMat, VecF3};
use crate::mathieu::{todd_action, NGenerator, Shape, ToddElement};
use crate::monomial::{self, MonMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    M12,
    A6,
    M11,
    M11Dual,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::M12, Case::A6, Case::M11, Case::M11Dual];
    pub const TODD: [Case; 3] = [Case::A6, Case::M11, Case::M11Dual];

    pub fn shape(self) -> Option<Shape> {
        match self {
            Case::M12 => None,
            Case::A6 => Some(Shape::A10),
            Case::M11 => Some(Shape::A11),
            Case::M11Dual => Some(Shape::A11Dual),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Case::M12 => "m12",
            Case::A6 => "a6",
            Case::M11 => "m11",
            Case::M11Dual => "m11dual",
        }
    }

    pub fn parse(s: &str) -> Option<Case> {
        Case::ALL.into_iter().find(|c| c.name() == s)
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// Unitriangular [[1,x,y],[0,1,z],[0,0,1]].
pub fn ut3(x: F3, y: F3, z: F3) -> SqMat<3> {
    SqMat::from_i64([[1, x.signed() as i64, y.signed() as i64], [0, 1, z.signed() as i64], [0, 0, 1]])
}

fn ut3_index(m: &SqMat<3>) -> usize {
    m.get(0, 1).value() as usize + 3 * m.get(0, 2).value() as usize + 9 * m.get(1, 2).value() as usize
}

fn ut3_from_index(k: usize) -> SqMat<3> {
    ut3(F3::new((k % 3) as i64), F3::new((k / 3 % 3) as i64), F3::new((k / 9) as i64))
}

/// S = A ⋊ T with precomputed addition, action and T-multiplication tables.
#[derive(Clone, Debug)]
pub struct SmallGroup {
    case: Case,
    dim: usize,
    a_size: usize,
    t_size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    act: Vec<u32>,
    t_mul: Vec<u32>,
    t_inv: Vec<u32>,
}

impl SmallGroup {
    pub fn case(&self) -> Case {
        self.case
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    pub fn t_size(&self) -> usize {
        self.t_size
    }

    pub fn elem(&self, a: usize, t: usize) -> usize {
        a * self.t_size + t
    }

    pub fn a_part(&self, g: usize) -> usize {
        g / self.t_size
    }

    pub fn t_part(&self, g: usize) -> usize {
        g % self.t_size
    }

    pub fn a_vec(&self, a: usize) -> VecF3 {
        linalg::vector_from_index(a, self.dim)
    }

    pub fn a_elem(&self, v: &[F3]) -> usize {
        self.elem(linalg::vector_index(v), 0)
    }

    pub fn act(&self, t: usize, a: usize) -> usize {
        self.act[t * self.a_size + a] as usize
    }

    pub fn a_add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.a_size + b] as usize
    }

    pub fn a_neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn is_in_a(&self, g: usize) -> bool {
        self.t_part(g) == 0
    }

    /// [a, b, c] ⟨x⟩ for the Todd-module cases.
    pub fn from_todd(&self, e: ToddElement, x: F9) -> usize {
        let shape = self.case.shape().expect("Todd-module case");
        self.elem(linalg::vector_index(&e.to_vec(shape)), x.index())
    }

    pub fn todd(&self, g: usize) -> (ToddElement, F9) {
        let shape = self.case.shape().expect("Todd-module case");
        (ToddElement::from_vec(shape, &self.a_vec(self.a_part(g))), F9::from_index(self.t_part(g)))
    }

    /// X · M for the M12 case.
    pub fn from_sym(&self, x: &SymElt, m: &SqMat<3>) -> usize {
        self.elem(linalg::vector_index(&golay::sym_to_vec(x)), ut3_index(m))
    }

    pub fn sym(&self, g: usize) -> (SymElt, SqMat<3>) {
        (golay::vec_to_sym(&self.a_vec(self.a_part(g))), ut3_from_index(self.t_part(g)))
    }

    pub fn t_elem(&self, t: usize) -> usize {
        self.elem(0, t)
    }

    pub fn a_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self, (0..self.a_size).map(|a| self.elem(a, 0)).collect())
    }

    pub fn t_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self, (0..self.t_size).map(|t| self.elem(0, t)).collect())
    }

    /// Subgroup of A spanned by the given vectors.
    pub fn a_span(&self, vecs: &[VecF3]) -> Subgroup {
        let members = linalg::span(vecs, self.dim).iter().map(|v| self.a_elem(v)).collect();
        Subgroup::from_members(self, members)
    }

    /// A-parts of the members of a subgroup contained in A.
    pub fn a_vectors(&self, h: &Subgroup) -> Vec<VecF3> {
        h.members().iter().filter(|&&g| self.is_in_a(g)).map(|&g| self.a_vec(self.a_part(g))).collect()
    }

    /// Matrix of t acting on A, columns are images of the unit vectors.
    pub fn action_matrix(&self, t: usize) -> MatF3 {
        let cols: Vec<VecF3> = (0..self.dim)
            .map(|k| {
                let mut e = vec![F3::ZERO; self.dim];
                e[k] = F3::ONE;
                self.a_vec(self.act(t, linalg::vector_index(&e)))
            })
            .collect();
        MatF3::from_cols(&cols)
    }
}

impl FiniteGroup for SmallGroup {
    fn order(&self) -> usize {
        self.a_size * self.t_size
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let (a, t) = (x / self.t_size, x % self.t_size);
        let (b, u) = (y / self.t_size, y % self.t_size);
        let a2 = self.add[a * self.a_size + self.act[t * self.a_size + b] as usize] as usize;
        a2 * self.t_size + self.t_mul[t * self.t_size + u] as usize
    }

    fn inv(&self, x: usize) -> usize {
        let (a, t) = (x / self.t_size, x % self.t_size);
        let ti = self.t_inv[t] as usize;
        let a2 = self.act[ti * self.a_size + self.neg[a] as usize] as usize;
        a2 * self.t_size + ti
    }
}

pub fn build_s(case: Case) -> SmallGroup {
    let dim = case.shape().map_or(6, Shape::dim);
    let a_size = 3usize.pow(dim as u32);
    let vecs: Vec<VecF3> = (0..a_size).map(|k| linalg::vector_from_index(k, dim)).collect();
    let mut add = vec![0u32; a_size * a_size];
    for a in 0..a_size {
        for b in 0..a_size {
            add[a * a_size + b] = linalg::vector_index(&linalg::add_vec(&vecs[a], &vecs[b])) as u32;
        }
    }
    let neg = vecs.iter().map(|v| linalg::vector_index(&linalg::scale_vec(F3::MINUS_ONE, v)) as u32).collect();
    let (t_size, act_fn, t_mul_fn): (usize, Box<dyn Fn(usize, &VecF3) -> VecF3>, Box<dyn Fn(usize, usize) -> usize>) =
        match case.shape() {
            None => (
                27,
                Box::new(|t, v| golay::sym_to_vec(&golay::congruence(&ut3_from_index(t), &golay::vec_to_sym(v))).to_vec()),
                Box::new(|t, u| ut3_index(&ut3_from_index(t).mul(&ut3_from_index(u)))),
            ),
            Some(shape) => (
                9,
                Box::new(move |t, v| {
                    todd_action(shape, NGenerator::Translation(F9::from_index(t)), ToddElement::from_vec(shape, v)).to_vec(shape)
                }),
                Box::new(|t, u| (F9::from_index(t) + F9::from_index(u)).index()),
            ),
        };
    let mut act = vec![0u32; t_size * a_size];
    for t in 0..t_size {
        for (a, v) in vecs.iter().enumerate() {
            act[t * a_size + a] = linalg::vector_index(&act_fn(t, v)) as u32;
        }
    }
    let mut t_mul = vec![0u32; t_size * t_size];
    for t in 0..t_size {
        for u in 0..t_size {
            t_mul[t * t_size + u] = t_mul_fn(t, u) as u32;
        }
    }
    let t_inv = (0..t_size).map(|t| (0..t_size).find(|&u| t_mul[t * t_size + u] == 0).expect("group") as u32).collect();
    SmallGroup { case, dim, a_size, t_size, add, neg, act, t_mul, t_inv }
}

/// Shared instances, one per case.
pub fn s_group(case: Case) -> &'static SmallGroup {
    static S: [OnceLock<SmallGroup>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    S[case.slot()].get_or_init(|| build_s(case))
}

/// Group axioms: identity and inverses on all elements, associativity on sampled triples.
pub fn check_axioms(s: &SmallGroup, samples: usize, seed: u64) -> bool {
    use rand::{Rng, SeedableRng};
    let n = s.order();
    let id_inv = (0..n).all(|x| s.mul(x, 0) == x && s.mul(0, x) == x && s.mul(x, s.inv(x)) == 0);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    id_inv
        && (0..samples).all(|_| {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z))
        })
}

#[derive(Clone, Debug)]
pub struct Structure {
    pub order: usize,
    pub center: Subgroup,
    pub derived: Subgroup,
    pub frattini: Subgroup,
    pub omega1: Subgroup,
    pub exponent: usize,
    pub is_special: bool,
    pub is_extraspecial: bool,
}

impl Structure {
    /// (a, b) with |Z| = 3^a and |Q/Z| = 3^b, for special groups.
    pub fn shape(&self) -> Option<(u32, u32)> {
        self.is_special.then(|| (log3(self.center.order()), log3(self.order / self.center.order())))
    }
}

pub fn log3(n: usize) -> u32 {
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= 3;
        k += 1;
    }
    k
}

pub fn structure<G: FiniteGroup + ?Sized>(g: &G, q: &Subgroup) -> Structure {
    let center = q.center(g);
    let derived = q.derived(g);
    let frattini = q.frattini_p(g, 3);
    let omega1 = q.omega1(g, 3);
    let exponent = q.exponent(g);
    let z_elementary = center.exponent(g) <= 3;
    let is_special = !q.is_abelian(g) && center == derived && derived == frattini && z_elementary;
    Structure {
        order: q.order(),
        is_extraspecial: is_special && center.order() == 3,
        center,
        derived,
        frattini,
        omega1,
        exponent,
        is_special,
    }
}

/// A_* = [T, A], the span of all t·a − a.
pub fn a_star(s: &SmallGroup) -> Subgroup {
    let vecs: Vec<VecF3> = (0..s.t_size())
        .flat_map(|t| (0..s.a_size()).map(move |a| (t, a)))
        .map(|(t, a)| linalg::sub_vec(&s.a_vec(s.act(t, a)), &s.a_vec(a)))
        .collect();
    s.a_span(&linalg::span_basis(&vecs, s.dim()))
}

/// C_A(T)
pub fn fixed_points(s: &SmallGroup) -> Subgroup {
    let members = (0..s.a_size()).filter(|&a| (0..s.t_size()).all(|t| s.act(t, a) == a)).map(|a| s.elem(a, 0)).collect();
    Subgroup::from_members(s, members)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SReport {
    pub order: usize,
    pub center_order: usize,
    pub center_is_fixed_points: bool,
    pub a_star_order: usize,
    pub derived_order: usize,
    /// [S,S] = A_*
    pub derived_is_a_star: bool,
    /// [S,S] = A_*·[T,T]
    pub derived_is_a_star_times_tt: bool,
    pub c_s_a_is_a: bool,
}

pub fn s_report(case: Case) -> SReport {
    let s = s_group(case);
    let whole = Subgroup::whole(s);
    let center = whole.center(s);
    let derived = whole.derived(s);
    let astar = a_star(s);
    let t = s.t_subgroup();
    let tt = t.derived(s);
    let a = s.a_subgroup();
    SReport {
        order: s.order(),
        center_order: center.order(),
        center_is_fixed_points: center == fixed_points(s),
        a_star_order: astar.order(),
        derived_order: derived.order(),
        derived_is_a_star: derived == astar,
        derived_is_a_star_times_tt: derived == astar.join(s, &tt),
        c_s_a_is_a: whole.centralizer(s, a.gens()) == a,
    }
}

/// k ∈ F3 ∪ {∞}
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(F3),
    Infinity,
}

impl Slope {
    pub fn all() -> [Slope; 4] {
        [Slope::Finite(F3::ZERO), Slope::Finite(F3::ONE), Slope::Finite(F3::MINUS_ONE), Slope::Infinity]
    }
}

/// η_k and η_∞ as matrices.
pub fn eta(k: Slope) -> SqMat<3> {
    match k {
        Slope::Finite(k) => ut3(F3::ONE, F3::ZERO, k),
        Slope::Infinity => ut3(F3::ZERO, F3::ZERO, F3::ONE),
    }
}

/// η̂, generating Z(T).
pub fn eta_hat() -> SqMat<3> {
    ut3(F3::ZERO, F3::ONE, F3::ZERO)
}

fn sym(rows: [[i64; 3]; 3]) -> SymElt {
    SqMat::from_i64(rows)
}

/// a_{ij}^x in 1-based indices: x at (i,j) and (j,i), or 2x at (i,i).
pub fn a_ij(i: usize, j: usize, x: i64) -> SymElt {
    let mut m = [[0i64; 3]; 3];
    if i == j {
        m[i - 1][i - 1] = 2 * x;
    } else {
        m[i - 1][j - 1] = x;
        m[j - 1][i - 1] = x;
    }
    sym(m)
}

/// Images η(X) from the closed formulas, X = [[t,u,r],[u,v,s],[r,s,a]].
pub fn ton_a_formula(which: Option<Slope>, x: &SymElt) -> SymElt {
    let e = |r, c| x.get(r, c).signed() as i64;
    let (t, u, r, v, s, a) = (e(0, 0), e(0, 1), e(0, 2), e(1, 1), e(1, 2), e(2, 2));
    match which {
        Some(Slope::Finite(k)) => {
            let k = k.signed() as i64;
            let m01 = u + v + k * (r + s);
            sym([[t - u + v, m01, r + s], [m01, v - k * s + a * k * k, s + a * k], [r + s, s + a * k, a]])
        }
        Some(Slope::Infinity) => sym([[t, u + r, r], [u + r, v - s + a, s + a], [r, s + a, a]]),
        None => sym([[t - r + a, u + s, r + a], [u + s, v, s], [r + a, s, a]]),
    }
}

/// The η-formulas agree with congruence on all of Sym3(F3), images and commutators.
pub fn ton_a_check() -> bool {
    let cases: Vec<(Option<Slope>, SqMat<3>)> = Slope::all()
        .into_iter()
        .map(|k| (Some(k), eta(k)))
        .chain(std::iter::once((None, eta_hat())))
        .collect();
    (0..729).all(|k| {
        let x = golay::sym_from_index(k);
        cases.iter().all(|(w, m)| {
            let img = golay::congruence(m, &x);
            let comm_ok = golay::sym_add(&img, &x.neg()) == golay::sym_add(&ton_a_formula(*w, &x), &x.neg());
            img == ton_a_formula(*w, &x) && comm_ok
        })
    })
}

#[derive(Clone, Debug)]
pub struct Uwq {
    pub u: Subgroup,
    pub w: Subgroup,
    pub q: Subgroup,
}

/// Z = Z(S) for the M12 case, as a subgroup of A.
pub fn m12_z() -> Subgroup {
    let s = s_group(Case::M12);
    Subgroup::whole(s).center(s)
}

pub fn build_uwq(k: Slope) -> Uwq {
    let s = s_group(Case::M12);
    let zero = SqMat::from_i64([[0; 3]; 3]);
    let gens = [s.from_sym(&zero, &eta_hat()), s.from_sym(&zero, &eta(k))];
    let u = Subgroup::generate(s, &gens);
    let z = m12_z();
    let members = (0..s.a_size())
        .map(|a| s.elem(a, 0))
        .filter(|&a| gens.iter().all(|&g| z.contains(s.comm(a, g))))
        .collect();
    let w = Subgroup::from_members(s, members);
    let q = w.join(s, &u);
    Uwq { u, w, q }
}

/// W_k from the explicit matrix shapes.
pub fn w_expected(k: Slope) -> Vec<SymElt> {
    let mut out = Vec::new();
    for t in -1..=1i64 {
        for u in -1..=1i64 {
            for r in -1..=1i64 {
                out.push(match k {
                    Slope::Finite(k) => sym([[t, u, r], [u, -(k.signed() as i64) * r, 0], [r, 0, 0]]),
                    Slope::Infinity => sym([[t, u, 0], [u, r, 0], [0, 0, 0]]),
                });
            }
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UwqReport {
    pub w_matches: bool,
    pub centralizer_order: usize,
    /// C_A(U_k) equals Z (finite k) or W_∞
    pub centralizer_matches: bool,
    pub q_order: usize,
    pub q_abelian: bool,
    pub q_extraspecial: bool,
    pub q_exponent: usize,
    pub normalizer_index: usize,
}

pub fn uwq_report(k: Slope) -> UwqReport {
    let s = s_group(Case::M12);
    let uwq = build_uwq(k);
    let mut w: Vec<SymElt> = uwq.w.members().iter().map(|&g| s.sym(g).0).collect();
    w.sort();
    let a = s.a_subgroup();
    let c = a.centralizer(s, uwq.u.gens());
    let expected_c = match k {
        Slope::Finite(_) => m12_z(),
        Slope::Infinity => uwq.w.clone(),
    };
    let st = structure(s, &uwq.q);
    let n = Subgroup::whole(s).normalizer(s, &uwq.q);
    UwqReport {
        w_matches: w == w_expected(k),
        centralizer_order: c.order(),
        centralizer_matches: c == expected_c,
        q_order: uwq.q.order(),
        q_abelian: uwq.q.is_abelian(s),
        q_extraspecial: st.is_extraspecial,
        q_exponent: st.exponent,
        normalizer_index: s.order() / n.order(),
    }
}

/// A_*·T in the M12 case.
pub fn m12_a_star_t() -> Subgroup {
    let s = s_group(Case::M12);
    a_star(s).join(s, &s.t_subgroup())
}

/// A-indices of one representative per coset of the subgroup `w ≤ A`.
pub fn a_coset_reps(s: &SmallGroup, w: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; s.a_size()];
    let mut reps = Vec::new();
    for a in 0..s.a_size() {
        if seen[a] {
            continue;
        }
        reps.push(a);
        for &m in w.members() {
            seen[s.a_add(a, s.a_part(m))] = true;
        }
    }
    reps
}

#[derive(Clone, Debug)]
pub struct AbelianCensus {
    pub candidates: usize,
    pub found: Vec<Subgroup>,
    pub contains_q_inf: bool,
    /// every non-identity conjugate is reached from Q_∞ by some element of ⟨a33⟩ outside A_*
    pub conjugators_in_a33: bool,
}

/// Abelian subgroups B of order 3⁵ with B ∩ A = W_∞ and BA = U_∞A.
pub fn count_abelian_3_5_not_in_a() -> AbelianCensus {
    let s = s_group(Case::M12);
    let inf = build_uwq(Slope::Infinity);
    let reps = a_coset_reps(s, &inf.w);
    let mut found: Vec<Subgroup> = Vec::new();
    let mut candidates = 0;
    let zero = SqMat::from_i64([[0; 3]; 3]);
    let hat = ut3_index(&eta_hat());
    let e_inf = ut3_index(&eta(Slope::Infinity));
    let a = s.a_subgroup();
    for &b1 in &reps {
        for &b2 in &reps {
            candidates += 1;
            let mut gens = inf.w.gens().to_vec();
            gens.push(s.elem(b1, hat));
            gens.push(s.elem(b2, e_inf));
            let b = Subgroup::generate(s, &gens);
            if b.order() == 243 && b.is_abelian(s) && b.intersection(s, &a) == inf.w && !found.contains(&b) {
                found.push(b);
            }
        }
    }
    let astar = a_star(s);
    let a33: Vec<usize> = (-1..=1).map(|x| s.from_sym(&a_ij(3, 3, x), &zero)).collect();
    let conjugators_in_a33 = found.iter().filter(|b| **b != inf.q).all(|b| {
        a33.iter().any(|&c| !astar.contains(c) && inf.q.conjugate(s, c) == *b)
    });
    AbelianCensus { candidates, contains_q_inf: found.contains(&inf.q), found, conjugators_in_a33 }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraspecialReport {
    /// U_k-invariant rank-3 subspaces P0 of A, per slope
    pub invariant_p0: [usize; 4],
    pub candidates: usize,
    pub found_per_slope: [usize; 4],
    pub all_center_z: bool,
    pub all_in_q_k: bool,
    pub q0_found: bool,
    /// W₀⟨η̂, a₂₃η₀⟩ lies in 𝒬₀ and is not extraspecial
    pub witness_not_extraspecial: bool,
}

fn extraspecial_p<G: FiniteGroup + ?Sized>(g: &G, p: &Subgroup) -> bool {
    let gens = p.gens();
    let center: Vec<usize> =
        p.members().iter().copied().filter(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x))).collect();
    if center.len() != 3 {
        return false;
    }
    let in_center = |x: usize| center.contains(&x);
    let some_comm = gens.iter().any(|&x| gens.iter().any(|&y| g.comm(x, y) != g.identity()));
    some_comm
        && gens.iter().all(|&x| gens.iter().all(|&y| in_center(g.comm(x, y))))
        && p.members().iter().all(|&x| in_center(g.pow(x, 3)))
}

/// Search over P = P0⟨g1η̂, g2η_k⟩ for every slope k, every U_k-invariant
/// rank-3 subspace P0 ≤ A and every pair of coset representatives of A/P0.
pub fn extraspecial_3_5_classification() -> ExtraspecialReport {
    let s = s_group(Case::M12);
    let z = m12_z();
    let hat = ut3_index(&eta_hat());
    let subspaces = linalg::subspaces(6, 3);
    let mut invariant_p0 = [0; 4];
    let mut found_per_slope = [0; 4];
    let mut candidates = 0;
    let mut all_center_z = true;
    let mut all_in_q_k = true;
    let mut q0_found = false;
    for (slot, k) in Slope::all().into_iter().enumerate() {
        let tk = ut3_index(&eta(k));
        let uwq = build_uwq(k);
        let invariant: Vec<Subgroup> = subspaces
            .par_iter()
            .filter_map(|basis| {
                let p0 = s.a_span(basis);
                let stable = basis.iter().all(|v| {
                    let a = linalg::vector_index(v);
                    p0.contains(s.elem(s.act(hat, a), 0)) && p0.contains(s.elem(s.act(tk, a), 0))
                });
                stable.then_some(p0)
            })
            .collect();
        invariant_p0[slot] = invariant.len();
        let hits: Vec<(usize, Vec<Subgroup>)> = invariant
            .par_iter()
            .map(|p0| {
                let reps = a_coset_reps(s, p0);
                let mut out = Vec::new();
                let mut tried = 0;
                for &g1 in &reps {
                    for &g2 in &reps {
                        tried += 1;
                        let x = s.elem(g1, hat);
                        let y = s.elem(g2, tk);
                        if !(p0.contains(s.pow(x, 3)) && p0.contains(s.pow(y, 3)) && p0.contains(s.comm(x, y))) {
                            continue;
                        }
                        let mut gens = p0.gens().to_vec();
                        gens.push(x);
                        gens.push(y);
                        let p = Subgroup::generate(s, &gens);
                        if extraspecial_p(s, &p) {
                            out.push(p);
                        }
                    }
                }
                (tried, out)
            })
            .collect();
        for (tried, ps) in hits {
            candidates += tried;
            for p in ps {
                found_per_slope[slot] += 1;
                all_center_z &= p.center(s) == z;
                let p0 = p.intersection(s, &s.a_subgroup());
                all_in_q_k &= matches!(k, Slope::Finite(_)) && p0 == uwq.w;
                if k == Slope::Finite(F3::ZERO) && p == uwq.q {
                    q0_found = true;
                }
            }
        }
    }
    let w0 = build_uwq(Slope::Finite(F3::ZERO));
    let mut gens = w0.w.gens().to_vec();
    gens.push(s.from_sym(&SqMat::from_i64([[0; 3]; 3]), &eta_hat()));
    gens.push(s.from_sym(&a_ij(2, 3, 1), &eta(Slope::Finite(F3::ZERO))));
    let witness = Subgroup::generate(s, &gens);
    let in_q0 = witness.intersection(s, &s.a_subgroup()) == w0.w && witness.order() == 243;
    ExtraspecialReport {
        invariant_p0,
        candidates,
        found_per_slope,
        all_center_z,
        all_in_q_k,
        q0_found,
        witness_not_extraspecial: in_q0 && !structure(s, &witness).is_extraspecial,
    }
}

#[derive(Clone, Debug)]
pub struct SpecialQReport {
    pub candidates: usize,
    /// members of 𝒬: Q ∩ A = A_*, QA = S, Q/Z abelian of order 3⁴
    pub q_count: usize,
    /// members of 𝒬 of exponent 3
    pub q0_count: usize,
    pub q: Option<Subgroup>,
    pub equals_a_star_t: bool,
    pub shape: Option<(u32, u32)>,
    pub extraspecial: bool,
    pub out_s_q: usize,
}

/// Search over Q = A_*⟨g1⟨1⟩, g2⟨i⟩⟩ with g1, g2 running over A/A_*.
pub fn unique_special_q(case: Case) -> Result<SpecialQReport, Error> {
    if case == Case::M12 {
        return Err(Error::Hypothesis("the special subgroup search applies to the Todd-module cases".into()));
    }
    let s = s_group(case);
    let astar = a_star(s);
    let z = Subgroup::whole(s).center(s);
    let reps = a_coset_reps(s, &astar);
    let a = s.a_subgroup();
    let (t1, ti) = (F9::ONE.index(), I.index());
    let mut q_all = Vec::new();
    let mut candidates = 0;
    for &g1 in &reps {
        for &g2 in &reps {
            candidates += 1;
            let mut gens = astar.gens().to_vec();
            gens.push(s.elem(g1, t1));
            gens.push(s.elem(g2, ti));
            let q = Subgroup::generate(s, &gens);
            let ok = q.order() == astar.order() * 9
                && q.intersection(s, &a) == astar
                && q.gens().iter().all(|&x| q.gens().iter().all(|&y| z.contains(s.comm(x, y))))
                && q.order() / z.order() == 81;
            if ok && !q_all.contains(&q) {
                q_all.push(q);
            }
        }
    }
    let q0: Vec<&Subgroup> = q_all.iter().filter(|q| q.exponent(s) == 3).collect();
    let q = if q0.len() == 1 { Some(q0[0].clone()) } else { None };
    let at = astar.join(s, &s.t_subgroup());
    let (shape, extraspecial, out_s_q) = match &q {
        Some(q) => {
            let st = structure(s, q);
            let cq = Subgroup::whole(s).centralizer(s, q.gens());
            (st.shape(), st.is_extraspecial, s.order() / q.join(s, &cq).order())
        }
        None => (None, false, 0),
    };
    Ok(SpecialQReport {
        candidates,
        q_count: q_all.len(),
        q0_count: q0.len(),
        equals_a_star_t: q.as_ref() == Some(&at),
        q,
        shape,
        extraspecial,
        out_s_q,
    })
}

/// ⟪a, b, z⟫ ∈ Q
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QTriple {
    pub a: F9,
    pub b: F9,
    pub z: F9,
}

impl QTriple {
    pub fn new(a: F9, b: F9, z: F9) -> QTriple {
        QTriple { a, b, z }
    }

    pub fn all(case: Case) -> Vec<QTriple> {
        let zs: Vec<F9> = if case == Case::M11 { F9::all().collect() } else { F3::all().map(F9::from_f3).to_vec() };
        let mut out = Vec::new();
        for a in F9::all() {
            for b in F9::all() {
                for &z in &zs {
                    out.push(QTriple { a, b, z });
                }
            }
        }
        out
    }
}

/// ⟪a,b,z⟫ = [0,a,z]⟨b⟩; in the M11* case the central coordinate is negated,
/// [0,a,−z]⟨b⟩, so that the product takes the form with μ = −Tr(bc).
pub fn qtriple_to_s(case: Case, q: QTriple) -> usize {
    let s = s_group(case);
    let z = if case == Case::M11Dual { -q.z } else { q.z };
    s.from_todd(ToddElement::new(F9::ZERO, q.a, z), q.b)
}

pub fn mu(case: Case, b: F9, c: F9) -> F9 {
    match case {
        Case::A6 => F9::from_f3((b.conj() * c).trace()),
        Case::M11 => b * c,
        Case::M11Dual => F9::from_f3(-(b * c).trace()),
        Case::M12 => panic!("no triple notation in the M12 case"),
    }
}

pub fn qtriple_mul(case: Case, x: QTriple, y: QTriple) -> QTriple {
    QTriple::new(x.a + y.a, x.b + y.b, x.z + y.z + mu(case, x.b, y.a))
}

/// Automorphism of S induced by an element of N̂: (a, x) ↦ (g·a, g⟨x⟩g⁻¹).
pub fn n_hat_on_s(s: &SmallGroup, g: NGenerator, x: usize) -> usize {
    let shape = s.case().shape().expect("Todd-module case");
    let (a, t) = s.todd(x);
    let t2 = match g {
        NGenerator::Translation(_) | NGenerator::Negation => t,
        NGenerator::Scalar(u) => u * t,
        NGenerator::Frobenius => t.conj(),
    };
    s.from_todd(todd_action(shape, g, a), t2)
}

/// Whether f(xy) = f(x)f(y) for all x and all generators y (enough for a homomorphism).
pub fn is_hom_on_gens<G: FiniteGroup + ?Sized>(g: &G, gens: &[usize], f: impl Fn(usize) -> usize + Sync) -> bool {
    (0..g.order()).into_par_iter().all(|x| gens.iter().all(|&y| f(g.mul(x, y)) == g.mul(f(x), f(y))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTripleReport {
    pub pairs: usize,
    pub identity_ok: bool,
    pub mul_matches: bool,
    pub n_hat_automorphisms: bool,
    /// ^[u], ^[φ], ^(−Id) rows
    pub conj_rows: [bool; 3],
    /// ^[r,0,0]⟪a,b,z⟫ = ⟪a+rb, b, z+ν(r,b)⟫
    pub translation_row: bool,
}

fn expected_scalar(case: Case, u: F9, q: QTriple) -> QTriple {
    let ui = u.inv().expect("unit");
    match case {
        Case::A6 => QTriple::new(u * q.a, u * q.b, F9::from_f3(u.norm()) * q.z),
        Case::M11 => QTriple::new(u * q.a, u * q.b, u * u * q.z),
        _ => QTriple::new(ui * q.a, u * q.b, q.z),
    }
}

fn expected_frobenius(case: Case, q: QTriple) -> QTriple {
    let z = if case == Case::M11 { q.z.conj() } else { q.z };
    QTriple::new(q.a.conj(), q.b.conj(), z)
}

fn expected_translation(case: Case, r: F9, q: QTriple) -> QTriple {
    let b = q.b;
    let dz = match case {
        Case::A6 => r * F9::from_f3(b.norm()),
        Case::M11 => -(r * b * b),
        _ => F9::from_f3((r * b * b).trace()),
    };
    QTriple::new(q.a + r * b, b, q.z + dz)
}

pub fn qtriple_check(case: Case) -> QTripleReport {
    let s = s_group(case);
    let all = QTriple::all(case);
    let index: Vec<usize> = all.iter().map(|&q| qtriple_to_s(case, q)).collect();
    let zero = QTriple::new(F9::ZERO, F9::ZERO, F9::ZERO);
    let mul_matches = (0..all.len()).into_par_iter().all(|i| {
        (0..all.len()).all(|j| qtriple_to_s(case, qtriple_mul(case, all[i], all[j])) == s.mul(index[i], index[j]))
    });
    let gens: Vec<NGenerator> =
        F9::nonzero().map(NGenerator::Scalar).chain([NGenerator::Frobenius, NGenerator::Negation]).collect();
    let s_gens = Subgroup::whole(s).gens().to_vec();
    let n_hat_automorphisms = gens.iter().all(|&g| is_hom_on_gens(s, &s_gens, |x| n_hat_on_s(s, g, x)));
    let row = |g: NGenerator, f: &dyn Fn(QTriple) -> QTriple| {
        all.iter().all(|&q| n_hat_on_s(s, g, qtriple_to_s(case, q)) == qtriple_to_s(case, f(q)))
    };
    let scalar_row = F9::nonzero().all(|u| row(NGenerator::Scalar(u), &|q| expected_scalar(case, u, q)));
    let frob_row = row(NGenerator::Frobenius, &|q| expected_frobenius(case, q));
    let neg_row = row(NGenerator::Negation, &|q| QTriple::new(-q.a, q.b, -q.z));
    let rs: Vec<F9> = if case == Case::M11Dual { F9::all().collect() } else { F3::all().map(F9::from_f3).to_vec() };
    let translation_row = rs.iter().all(|&r| {
        let c = s.from_todd(ToddElement::new(r, F9::ZERO, F9::ZERO), F9::ZERO);
        all.iter().all(|&q| s.conj(c, qtriple_to_s(case, q)) == qtriple_to_s(case, expected_translation(case, r, q)))
    });
    QTripleReport {
        pairs: all.len() * all.len(),
        identity_ok: qtriple_to_s(case, zero) == s.identity(),
        mul_matches,
        n_hat_automorphisms,
        conj_rows: [scalar_row, frob_row, neg_row],
        translation_row,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeReport {
    pub pairs: usize,
    /// (ax)³ = x³ ⇔ [x,[x,a]] = 1
    pub criterion_holds: bool,
    /// a ∈ A_* ⇒ (ax)³ = x³
    pub a_star_implies_equal: bool,
    /// (ax)³ = x³ ⇔ a ∈ A_*, where it is claimed
    pub equal_iff_a_star: Option<bool>,
}

pub fn cube_criterion<G: FiniteGroup + ?Sized>(g: &G, x: usize, a: usize) -> (bool, bool) {
    let ax = g.mul(a, x);
    let cubes = g.pow(ax, 3) == g.pow(x, 3);
    let double = g.comm(x, g.comm(x, a)) == g.identity();
    (cubes, double)
}

pub fn cube_report(case: Case) -> CubeReport {
    let s = s_group(case);
    let astar = a_star(s);
    let xs: Vec<usize> = (0..s.order()).filter(|&x| !s.is_in_a(x)).collect();
    let results: Vec<(bool, bool, bool)> = xs
        .par_iter()
        .map(|&x| {
            let mut crit = true;
            let mut implied = true;
            let mut iff = true;
            for a in 0..s.a_size() {
                let ae = s.elem(a, 0);
                let (cubes, double) = cube_criterion(s, x, ae);
                crit &= cubes == double;
                if astar.contains(ae) {
                    implied &= cubes;
                }
                iff &= cubes == astar.contains(ae);
            }
            (crit, implied, iff)
        })
        .collect();
    let iff = results.iter().all(|r| r.2);
    CubeReport {
        pairs: xs.len() * s.a_size(),
        criterion_holds: results.iter().all(|r| r.0),
        a_star_implies_equal: results.iter().all(|r| r.1),
        equal_iff_a_star: matches!(case, Case::A6 | Case::M11).then_some(iff),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G0aReport {
    pub commutator_formula: bool,
    pub a_star_shape: bool,
    pub s_a_shape: bool,
    pub fixed_shape: bool,
    pub centralizer_shape: bool,
    pub jordan: Vec<Vec<usize>>,
    pub jordan_ok: bool,
}

/// Per-case rows for [s, [a,b,c]], A_*, [s, A], C_A(T), C_A(s) and the Jordan type of c_s.
pub fn table_g0a_check(case: Case) -> G0aReport {
    let s = s_group(case);
    let shape = case.shape().expect("Todd-module case");
    let all_a = ToddElement::all(shape);
    let tr = |x: F9| F9::from_f3(x.trace());
    let nm = |x: F9| F9::from_f3(x.norm());
    let set = |pred: &dyn Fn(&ToddElement) -> bool| -> FxHashSet<ToddElement> { all_a.iter().copied().filter(|e| pred(e)).collect() };
    let as_set = |h: &Subgroup| -> FxHashSet<ToddElement> { h.members().iter().map(|&g| s.todd(g).0).collect() };
    let is_f3 = |x: F9| x.im.is_zero();
    let mut commutator_formula = true;
    let mut s_a_shape = true;
    let mut centralizer_shape = true;
    let mut jordan = Vec::new();
    for x in F9::nonzero() {
        let comm_expected = |e: &ToddElement| match case {
            Case::A6 => ToddElement::new(F9::ZERO, -(e.a * x), tr(e.b.conj() * x) - e.a * nm(x)),
            Case::M11 => ToddElement::new(F9::ZERO, -(e.a * x), e.b * x + e.a * x * x),
            _ => ToddElement::new(F9::ZERO, -(e.a * x), tr(e.b * x + e.a * x * x)),
        };
        for a_prime in &all_a {
            let sx = s.from_todd(*a_prime, x);
            for e in &all_a {
                let c = s.comm(sx, s.from_todd(*e, F9::ZERO));
                commutator_formula &= s.todd(c) == (comm_expected(e), F9::ZERO);
            }
        }
        let sx = s.from_todd(ToddElement::ZERO, x);
        let s_a: FxHashSet<ToddElement> =
            all_a.iter().map(|e| s.todd(s.comm(sx, s.from_todd(*e, F9::ZERO))).0).collect();
        let s_a_expected = match case {
            Case::A6 => set(&|e| e.a.is_zero() && is_f3(e.b * x.inv().unwrap()) && is_f3(e.c)),
            Case::M11 => set(&|e| e.a.is_zero() && is_f3(e.b * x.inv().unwrap())),
            _ => set(&|e| e.a.is_zero()),
        };
        s_a_shape &= s_a == s_a_expected;
        let c_s: FxHashSet<ToddElement> = all_a
            .iter()
            .copied()
            .filter(|e| s.comm(sx, s.from_todd(*e, F9::ZERO)) == s.identity())
            .collect();
        let c_expected = match case {
            Case::A6 => set(&|e| e.a.is_zero() && (e.b * x.conj()).trace().is_zero()),
            Case::M11 => set(&|e| e.a.is_zero() && e.b.is_zero()),
            _ => set(&|e| e.a.is_zero() && (e.b * x).trace().is_zero()),
        };
        centralizer_shape &= c_s == c_expected;
        let m = s.action_matrix(x.index());
        jordan.push(linalg::jordan_partition(&m).unwrap_or_default());
    }
    let a_star_expected = set(&|e| e.a.is_zero());
    let fixed_expected = set(&|e| e.a.is_zero() && e.b.is_zero());
    let expected_jordan = if case == Case::A6 { vec![3, 1] } else { vec![3, 2] };
    G0aReport {
        commutator_formula,
        a_star_shape: as_set(&a_star(s)) == a_star_expected,
        s_a_shape,
        fixed_shape: as_set(&fixed_points(s)) == fixed_expected,
        centralizer_shape,
        jordan_ok: jordan.iter().all(|j| *j == expected_jordan),
        jordan,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecLemmaReport {
    pub z_order: usize,
    pub quotient_order: usize,
    /// Q/Z elementary abelian
    pub a_holds: bool,
    /// g³ depends only on gZ and is additive
    pub b_holds: bool,
    /// number of abelian subgroups of index p, when |Q/Z| = p³ and |Z| = p²
    pub c_count: Option<usize>,
    /// number of abelian subgroups of index p², when |Q/Z| = p⁴, |Z| = p² and [g,Q] = Z off Z
    pub d_count: Option<usize>,
    pub d_pairwise_z: Option<bool>,
    /// the abelian subgroups found in (c) or (d)
    pub abelian: Vec<Subgroup>,
}

/// Abelian subgroups of q containing Z(q) of order |Z|·p^rank.
fn abelian_over_center<G: FiniteGroup + ?Sized>(g: &G, q: &Subgroup, z: &Subgroup, rank: u32) -> Vec<Subgroup> {
    let (label, reps) = q.coset_labels(g, z);
    let quotient = q.quotient(g, z);
    let target = 3usize.pow(rank);
    let n = reps.len();
    let mut seen: FxHashSet<Vec<usize>> = FxHashSet::default();
    let mut out = Vec::new();
    let tuples: Vec<Vec<usize>> = match rank {
        1 => (1..n).map(|x| vec![x]).collect(),
        2 => (1..n).flat_map(|x| (x + 1..n).map(move |y| vec![x, y])).collect(),
        _ => panic!("rank ≤ 2"),
    };
    for t in tuples {
        let sub = Subgroup::generate(&quotient, &t);
        if sub.order() != target || !seen.insert(sub.members().to_vec()) {
            continue;
        }
        let lifts: Vec<usize> = t.iter().map(|&k| reps[k]).collect();
        let commute = lifts.iter().all(|&x| lifts.iter().all(|&y| g.comm(x, y) == g.identity()));
        if commute {
            let members = q.members().iter().copied().filter(|m| sub.contains(label[m])).collect();
            out.push(Subgroup::from_members(g, members));
        }
    }
    out
}

pub fn spec_lemma_suite<G: FiniteGroup + ?Sized>(g: &G, q: &Subgroup) -> Result<SpecLemmaReport, Error> {
    let z = q.center(g);
    let derived = q.derived(g);
    if q.is_abelian(g) || z != derived || z.exponent(g) > 3 || !z.is_abelian(g) {
        return Err(Error::Hypothesis("Z(Q) = [Q,Q] elementary abelian, Q nonabelian".into()));
    }
    let quotient_order = q.order() / z.order();
    let (label, _) = q.coset_labels(g, &z);
    let a_holds = q.members().iter().all(|&x| z.contains(g.pow(x, 3)));
    let cube = |x: usize| g.pow(x, 3);
    let well_defined = q.members().iter().all(|&x| z.members().iter().all(|&c| cube(g.mul(x, c)) == cube(x)));
    let additive = q.members().iter().all(|&x| q.gens().iter().all(|&y| cube(g.mul(x, y)) == g.mul(cube(x), cube(y))));
    let _ = label;
    let mut report = SpecLemmaReport {
        z_order: z.order(),
        quotient_order,
        a_holds,
        b_holds: well_defined && additive,
        c_count: None,
        d_count: None,
        d_pairwise_z: None,
        abelian: Vec::new(),
    };
    if quotient_order == 27 && z.order() == 9 {
        let found = abelian_over_center(g, q, &z, 2);
        report.c_count = Some(found.len());
        report.abelian = found;
    } else if quotient_order == 81 && z.order() == 9 {
        let full = q.members().iter().filter(|&&x| !z.contains(x)).all(|&x| {
            let comms: FxHashSet<usize> = q.members().iter().map(|&y| g.comm(x, y)).collect();
            comms.len() == z.order()
        });
        if full {
            let found = abelian_over_center(g, q, &z, 2);
            let pairwise = found.iter().enumerate().all(|(i, a)| found[i + 1..].iter().all(|b| a.intersection(g, b) == z));
            report.d_count = Some(found.len());
            report.d_pairwise_z = Some(pairwise);
            report.abelian = found;
        }
    }
    Ok(report)
}

/// S/Z as a table group, with the image of a subgroup of S.
pub fn mod_center(s: &SmallGroup, h: &Subgroup) -> (TableGroup, Subgroup) {
    let whole = Subgroup::whole(s);
    let z = whole.center(s);
    let (label, _) = whole.coset_labels(s, &z);
    let quotient = whole.quotient(s, &z);
    let mut image: Vec<usize> = h.members().iter().map(|m| label[m]).collect();
    image.sort_unstable();
    image.dedup();
    let sub = Subgroup::from_members(&quotient, image);
    (quotient, sub)
}

/// ω₁, ω₂, ω₃ : T → A10.
pub fn omega(i: usize, x: F9) -> ToddElement {
    let z = F9::ZERO;
    match i {
        1 => ToddElement::new(z, x, F9::from_f3(x.norm())),
        2 => ToddElement::new(z, x.conj(), F9::from_f3(-(x * x).trace())),
        3 => ToddElement::new(z, I * x.conj(), F9::from_f3((I * x * x).trace())),
        _ => panic!("ω index is 1, 2 or 3"),
    }
}

/// α_i([a,b,c]⟨x⟩) = ([a,b,c] + ω_i(x))⟨x⟩ on the A6-case S.
pub fn alpha(i: usize, g: usize) -> usize {
    let s = s_group(Case::A6);
    let (a, x) = s.todd(g);
    s.from_todd(a.add(omega(i, x)), x)
}

/// c_β for β = −[i]: [a,b,c]⟨x⟩ ↦ [−a,−ib,−c]⟨ix⟩.
pub fn beta(g: usize) -> usize {
    let s = s_group(Case::A6);
    let (a, x) = s.todd(g);
    s.from_todd(ToddElement::new(-a.a, -(I * a.b), -a.c), I * x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaReport {
    pub cocycle: [bool; 3],
    pub automorphism: [bool; 3],
    pub beta_automorphism: bool,
    pub alpha1_is_conjugation: bool,
    pub commute_with_beta: [bool; 2],
    pub matrices: Vec<SqMat<4>>,
    pub matrices_expected: bool,
    /// the three matrices generate {[[I,X],[0,I]] : X = Xᵗ}
    pub generate_radical: bool,
}

fn qz_coords(q: QTriple) -> [F3; 4] {
    [q.a.re, q.a.im, q.b.re, q.b.im]
}

/// Matrix on Q/Z in the basis ⟪1,0⟫, ⟪i,0⟫, ⟪0,1⟫, ⟪0,i⟫ of an automorphism of S preserving Q = A_*T.
pub fn matrix_on_q_mod_z(f: impl Fn(usize) -> usize) -> SqMat<4> {
    let s = s_group(Case::A6);
    let z = F9::ZERO;
    let basis = [QTriple::new(F9::ONE, z, z), QTriple::new(I, z, z), QTriple::new(z, F9::ONE, z), QTriple::new(z, I, z)];
    let cols: Vec<[F3; 4]> = basis
        .iter()
        .map(|&q| {
            let (e, x) = s.todd(f(qtriple_to_s(Case::A6, q)));
            qz_coords(QTriple::new(e.b, x, e.c))
        })
        .collect();
    let mut m = [[0i64; 4]; 4];
    for (c, col) in cols.iter().enumerate() {
        for r in 0..4 {
            m[r][c] = col[r].signed() as i64;
        }
    }
    SqMat::from_i64(m)
}

pub fn unipotent_block(x: [[i64; 2]; 2]) -> SqMat<4> {
    SqMat::from_i64([[1, 0, x[0][0], x[0][1]], [0, 1, x[1][0], x[1][1]], [0, 0, 1, 0], [0, 0, 0, 1]])
}

pub fn alpha_automorphisms() -> AlphaReport {
    let s = s_group(Case::A6);
    let shape = Shape::A10;
    let cocycle = [1, 2, 3].map(|i| {
        F9::all().all(|x| {
            F9::all().all(|y| omega(i, x + y) == omega(i, x).add(todd_action(shape, NGenerator::Translation(x), omega(i, y))))
        })
    });
    let gens = Subgroup::whole(s).gens().to_vec();
    let automorphism = [1, 2, 3].map(|i| is_hom_on_gens(s, &gens, |g| alpha(i, g)));
    let beta_automorphism = is_hom_on_gens(s, &gens, beta);
    let c100 = s.from_todd(ToddElement::new(F9::ONE, F9::ZERO, F9::ZERO), F9::ZERO);
    let alpha1_is_conjugation = (0..s.order()).all(|g| alpha(1, g) == s.conj(c100, g));
    let commute_with_beta = [2, 3].map(|i| (0..s.order()).all(|g| alpha(i, beta(g)) == beta(alpha(i, g))));
    let matrices: Vec<SqMat<4>> = [1, 2, 3].iter().map(|&i| matrix_on_q_mod_z(|g| alpha(i, g))).collect();
    let expected = [unipotent_block([[1, 0], [0, 1]]), unipotent_block([[1, 0], [0, -1]]), unipotent_block([[0, 1], [1, 0]])];
    let mut radical: Vec<SqMat<4>> = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            for d in -1..=1 {
                radical.push(unipotent_block([[a, b], [b, d]]));
            }
        }
    }
    radical.sort();
    let mut generated = vec![SqMat::<4>::identity()];
    let mut k = 0;
    while k < generated.len() {
        let x = generated[k];
        for m in &matrices {
            let y = m.mul(&x);
            if !generated.contains(&y) {
                generated.push(y);
            }
        }
        k += 1;
    }
    generated.sort();
    AlphaReport {
        cocycle,
        automorphism,
        beta_automorphism,
        alpha1_is_conjugation,
        commute_with_beta,
        matrices_expected: matrices == expected,
        matrices,
        generate_radical: generated == radical,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub normalizer_z: usize,
    pub centralizer_z: usize,
    /// N_Γ(U₀) = N_Γ(Z)
    pub normalizer_u0_equal: bool,
    pub o3_order: usize,
    pub o3_elementary: bool,
    pub o3_self_centralizing: bool,
    /// order of the image of C_Γ(Z) in Aut(O₃(C_Γ(Z)))
    pub o3_action_image: usize,
    /// N_Γ(Z) = C_Γ(Z) × ⟨−Id⟩
    pub direct_minus_id: bool,
    /// C_Γ(Z)-invariant subspaces of A, by order
    pub invariant_subspaces: Vec<usize>,
    pub only_z_and_w0: bool,
    pub normalizer_u0_preserves_w0: bool,
    /// kernel of N_Γ(U₀) on A/W₀
    pub kernel_on_a_mod_w0: usize,
    /// |A/W₀| · |N_Γ(U₀)/U₀|
    pub n_m_q_mod_q: usize,
}

/// Σ-closure of the cyclic submodules of F3^n under the given matrices.
pub fn invariant_subspaces(gens: &[MatF3], dim: usize) -> Vec<Vec<VecF3>> {
    let close = |start: Vec<VecF3>| -> Vec<VecF3> {
        let mut basis = linalg::span_basis(&start, dim);
        loop {
            let mut all = basis.clone();
            for m in gens {
                for v in &basis {
                    all.push(m.mul_vec(v));
                }
            }
            let next = linalg::span_basis(&all, dim);
            if next.len() == basis.len() {
                return basis;
            }
            basis = next;
        }
    };
    let key = |basis: &[VecF3]| -> Vec<usize> {
        let mut v: Vec<usize> = linalg::span(basis, dim).iter().map(|x| linalg::vector_index(x)).collect();
        v.sort_unstable();
        v
    };
    let mut found: Vec<Vec<VecF3>> = Vec::new();
    let mut keys: FxHashSet<Vec<usize>> = FxHashSet::default();
    for v in linalg::projective_points(dim) {
        let b = close(vec![v]);
        if keys.insert(key(&b)) {
            found.push(b);
        }
    }
    let mut k = 0;
    while k < found.len() {
        for j in 0..k {
            let mut both = found[k].clone();
            both.extend(found[j].iter().cloned());
            let b = close(both);
            if keys.insert(key(&b)) {
                found.push(b);
            }
        }
        k += 1;
    }
    found.push(Vec::new());
    found.sort_by_key(|b| b.len());
    found
}

fn sym_vec(x: &SymElt) -> VecF3 {
    golay::sym_to_vec(x).to_vec()
}

/// Computations inside Γ = 2M12 acting on A = Sym3(F3) through Φ.
pub fn gamma_report() -> GammaReport {
    let m = monomial::m12();
    let g = &m.group;
    let phi = golay::phi();
    let e00: SymElt = SqMat::from_i64([[1, 0, 0], [0, 0, 0], [0, 0, 0]]);
    let zv = phi.inverse(&e00);
    let neg_zv = golay::neg(&zv);
    let norm_members: Vec<usize> = (0..g.len()).filter(|&k| { let im = g.element(k).apply(&zv); im == zv || im == neg_zv }).collect();
    let cent_members: Vec<usize> = norm_members.iter().copied().filter(|&k| g.element(k).apply(&zv) == zv).collect();
    let n_z = Subgroup::from_members(g, norm_members);
    let c_z = Subgroup::from_members(g, cent_members);
    let u0_gens: Vec<MonMap> = [eta_hat(), eta(Slope::Finite(F3::ZERO))]
        .iter()
        .map(|mat| golay::theta_inv(mat).expect("UT3 lies in the image of Θ"))
        .collect();
    let u0 = g.subgroup(&u0_gens);
    let n_u0 = g.whole().normalizer(g, &u0);
    let ut3_gens: Vec<MonMap> = [ut3(F3::ONE, F3::ZERO, F3::ZERO), ut3(F3::ZERO, F3::ZERO, F3::ONE)]
        .iter()
        .map(|mat| golay::theta_inv(mat).expect("UT3 lies in the image of Θ"))
        .collect();
    let t = &g.subgroup(&ut3_gens);
    let mut core = t.members().to_vec();
    for &c in c_z.members() {
        core.retain(|&x| t.contains(g.conj(c, x)));
    }
    let o3 = Subgroup::from_members(g, core);
    let c_o3 = c_z.centralizer(g, o3.gens());
    let minus = g.index_of(&MonMap::minus_identity()).expect("−Id ∈ 2M12");
    let direct_minus_id = !c_z.contains(minus)
        && n_z.order() == 2 * c_z.order()
        && n_z.contains(minus)
        && g.whole().gens().iter().all(|&x| g.mul(x, minus) == g.mul(minus, x));
    let gens_mats: Vec<MatF3> = c_z
        .gens()
        .iter()
        .map(|&k| {
            let cols: Vec<VecF3> = (0..6)
                .map(|j| {
                    let mut e = [F3::ZERO; 6];
                    e[j] = F3::ONE;
                    sym_vec(&phi.transport(g.element(k), &golay::vec_to_sym(&e)))
                })
                .collect();
            MatF3::from_cols(&cols)
        })
        .collect();
    let subs = invariant_subspaces(&gens_mats, 6);
    let invariant_sizes: Vec<usize> = subs.iter().map(|b| 3usize.pow(b.len() as u32)).collect();
    let key = |vs: Vec<VecF3>| -> Vec<usize> {
        let mut v: Vec<usize> = vs.iter().map(|x| linalg::vector_index(x)).collect();
        v.sort_unstable();
        v
    };
    let z_set = key(vec![vec![F3::ZERO; 6], sym_vec(&e00), sym_vec(&e00.neg())]);
    let w0_set = key(w_expected(Slope::Finite(F3::ZERO)).iter().map(sym_vec).collect());
    let proper: Vec<Vec<usize>> =
        subs.iter().filter(|b| !b.is_empty() && b.len() < 6).map(|b| key(linalg::span(b, 6))).collect();
    let only_z_and_w0 = proper.len() == 2 && proper.contains(&z_set) && proper.contains(&w0_set);
    let w0_syms = w_expected(Slope::Finite(F3::ZERO));
    let in_w0 = |x: &SymElt| w0_syms.binary_search(x).is_ok();
    let normalizer_u0_preserves_w0 =
        n_u0.gens().iter().all(|&k| w0_syms.iter().all(|x| in_w0(&phi.transport(g.element(k), x))));
    let all_syms: Vec<SymElt> = (0..729).map(golay::sym_from_index).collect();
    let kernel = n_u0
        .members()
        .iter()
        .filter(|&&k| all_syms.iter().all(|x| in_w0(&golay::sym_add(&phi.transport(g.element(k), x), &x.neg()))))
        .count();
    GammaReport {
        normalizer_z: n_z.order(),
        centralizer_z: c_z.order(),
        normalizer_u0_equal: n_u0 == n_z,
        o3_order: o3.order(),
        o3_elementary: o3.is_abelian(g) && o3.exponent(g) == 3,
        o3_self_centralizing: c_o3 == o3,
        o3_action_image: c_z.order() / c_o3.order(),
        direct_minus_id,
        invariant_subspaces: invariant_sizes,
        only_z_and_w0,
        normalizer_u0_preserves_w0,
        kernel_on_a_mod_w0: kernel,
        n_m_q_mod_q: (729 / 27) * (n_u0.order() / u0.order()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_axioms() {
        let expect = [(Case::M12, 19683, 3), (Case::A6, 729, 3), (Case::M11, 2187, 9), (Case::M11Dual, 2187, 3)];
        for (case, order, z) in expect {
            let s = s_group(case);
            assert!(check_axioms(s, 10_000, 7), "{case:?}");
            let r = s_report(case);
            assert_eq!((r.order, r.center_order), (order, z), "{case:?}");
            assert!(r.center_is_fixed_points && r.c_s_a_is_a);
            if case == Case::M12 {
                assert!(!r.derived_is_a_star && r.derived_is_a_star_times_tt);
            } else {
                assert!(r.derived_is_a_star);
            }
        }
    }

    #[test]
    fn structure_of_elementary_a() {
        let s = s_group(Case::A6);
        let st = structure(s, &s.a_subgroup());
        assert_eq!(st.exponent, 3);
        assert_eq!(st.derived.order(), 1);
        assert!(!st.is_special);
    }

    #[test]
    fn ton_a() {
        assert!(ton_a_check());
    }

    #[test]
    fn uwq() {
        for k in Slope::all() {
            let r = uwq_report(k);
            assert!(r.w_matches && r.centralizer_matches, "{k:?}");
            assert_eq!(r.q_order, 243);
            match k {
                Slope::Infinity => assert!(r.q_abelian && r.q_exponent == 3),
                Slope::Finite(c) => {
                    assert!(r.q_extraspecial && r.q_exponent == 3);
                    assert_eq!(r.normalizer_index, if c.is_zero() { 1 } else { 3 });
                }
            }
        }
        let n1 = Subgroup::whole(s_group(Case::M12)).normalizer(s_group(Case::M12), &build_uwq(Slope::Finite(F3::ONE)).q);
        assert_eq!(n1, m12_a_star_t());
    }

    #[test]
    fn abelian_census() {
        let c = count_abelian_3_5_not_in_a();
        assert_eq!(c.candidates, 729);
        assert_eq!(c.found.len(), 3);
        assert!(c.contains_q_inf && c.conjugators_in_a33);
    }

    #[test]
    fn special_q() {
        let expect = [(Case::A6, (1, 4), 3), (Case::M11, (2, 4), 3), (Case::M11Dual, (1, 4), 9)];
        for (case, shape, out) in expect {
            let r = unique_special_q(case).unwrap();
            assert!(r.candidates <= 81);
            assert_eq!(r.q0_count, 1, "{case:?}");
            assert!(r.equals_a_star_t);
            assert_eq!(r.shape, Some(shape));
            assert_eq!(r.out_s_q, out, "{case:?}");
        }
        assert!(unique_special_q(Case::M12).is_err());
    }

    #[test]
    fn qtriples() {
        for case in Case::TODD {
            let r = qtriple_check(case);
            assert!(r.identity_ok && r.mul_matches && r.n_hat_automorphisms, "{case:?}");
            assert_eq!(r.conj_rows, [true; 3], "{case:?}");
            assert!(r.translation_row, "{case:?}");
        }
    }

    #[test]
    fn g0a_rows() {
        for case in Case::TODD {
            let r = table_g0a_check(case);
            assert!(r.commutator_formula && r.a_star_shape && r.s_a_shape, "{case:?} {r:?}");
            assert!(r.fixed_shape && r.centralizer_shape && r.jordan_ok, "{case:?} {r:?}");
        }
    }

    #[test]
    fn cubes() {
        for case in Case::TODD {
            let r = cube_report(case);
            assert!(r.criterion_holds && r.a_star_implies_equal, "{case:?}");
            if let Some(iff) = r.equal_iff_a_star {
                assert!(iff);
            }
        }
        let s = s_group(Case::A6);
        let x = s.from_todd(ToddElement::ZERO, F9::ONE);
        let a = s.from_todd(ToddElement::new(F9::ONE, F9::ZERO, F9::ZERO), F9::ZERO);
        assert!(!cube_criterion(s, x, a).0);
        assert!(cube_criterion(s, x, s.identity()).0);
    }

    #[test]
    fn spec_lemma() {
        let s = s_group(Case::M11);
        let q = unique_special_q(Case::M11).unwrap().q.unwrap();
        let r = spec_lemma_suite(s, &q).unwrap();
        assert!(r.a_holds && r.b_holds);
        assert_eq!(r.d_count, Some(10));
        assert_eq!(r.d_pairwise_z, Some(true));
        let q0 = build_uwq(Slope::Finite(F3::ZERO)).q;
        let r0 = spec_lemma_suite(s_group(Case::M12), &q0).unwrap();
        assert!(r0.a_holds && r0.b_holds);
        assert!(q0.members().iter().all(|&x| s_group(Case::M12).pow(x, 3) == 0));
        for case in [Case::A6, Case::M11] {
            let s = s_group(case);
            let q = unique_special_q(case).unwrap().q.unwrap();
            let (bar, qbar) = mod_center(s, &q);
            let whole = Subgroup::whole(&bar);
            let rc = spec_lemma_suite(&bar, &whole).unwrap();
            assert_eq!(rc.c_count, Some(1), "{case:?}");
            assert_eq!(rc.abelian[0], qbar);
        }
        let a = s_group(Case::A6).a_subgroup();
        assert!(spec_lemma_suite(s_group(Case::A6), &a).is_err());
    }

    #[test]
    fn alphas() {
        let r = alpha_automorphisms();
        assert_eq!(r.cocycle, [true; 3]);
        assert_eq!(r.automorphism, [true; 3]);
        assert!(r.beta_automorphism && r.alpha1_is_conjugation);
        assert_eq!(r.commute_with_beta, [true; 2]);
        assert!(r.matrices_expected && r.generate_radical);
    }

    #[test]
    fn extraspecial_census() {
        let r = extraspecial_3_5_classification();
        assert_eq!(r.found_per_slope[3], 0);
        assert!(r.found_per_slope[..3].iter().all(|&n| n > 0), "{r:?}");
        assert!(r.all_center_z && r.all_in_q_k && r.q0_found, "{r:?}");
        assert!(r.witness_not_extraspecial);
    }

    #[test]
    fn gamma() {
        let r = gamma_report();
        assert_eq!((r.normalizer_z, r.centralizer_z), (864, 432));
        assert!(r.normalizer_u0_equal && r.direct_minus_id, "{r:?}");
        assert!(r.o3_order == 9 && r.o3_elementary && r.o3_self_centralizing, "{r:?}");
        assert_eq!(r.o3_action_image, 48);
        assert!(r.only_z_and_w0, "{r:?}");
        assert!(r.normalizer_u0_preserves_w0);
        assert_eq!(r.kernel_on_a_mod_w0, 18);
        assert_eq!(r.n_m_q_mod_q, 2592);
    }
}
