//! Sp4(3) and Sp*4(3), order-3 classes, some subgroups of Sp4(3), lifts to
//! Aut(3^{1+4}_+) and the automorphism group of UT3(q) for q = 3, 9.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::Error;
use crate::gf::{F3, F9, I, ZETA};
use crate::group::{self, orbit, FiniteGroup, Group, GroupElement, Perm, Subgroup, TableGroup};
use crate::linalg::{self, MatF3, SqMat, SymplecticForm, VecF3};
use crate::pgroups::{self, Case, QTriple};

pub type M4 = SqMat<4>;

/// Gram matrix [[0,I],[−I,0]] in the basis e1, e2, f1, f2.
pub fn gram() -> M4 {
    M4::from_i64([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

pub fn form(v: &[F3], w: &[F3]) -> F3 {
    linalg::dot(v, &gram().mul_vec(w))
}

/// s with mᵀJm = sJ, if any.
pub fn form_sign(m: &M4) -> Option<F3> {
    let j = gram();
    let t = m.transpose().mul(&j).mul(m);
    if t == j {
        Some(F3::ONE)
    } else if t == j.neg() {
        Some(F3::MINUS_ONE)
    } else {
        None
    }
}

/// x ↦ x + b(x,v)·v
pub fn transvection(v: &[F3]) -> M4 {
    let jv = gram().mul_vec(v);
    let mut m = [[0i64; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            m[r][c] = (r == c) as i64 + (v[r] * jv[c]).signed() as i64;
        }
    }
    M4::from_i64(m)
}

/// [[I,X],[0,I]]
pub fn unipotent(x: [[i64; 2]; 2]) -> M4 {
    M4::from_i64([[1, 0, x[0][0], x[0][1]], [0, 1, x[1][0], x[1][1]], [0, 0, 1, 0], [0, 0, 0, 1]])
}

/// diag(I, −I), of sign −1.
pub fn similitude() -> M4 {
    M4::from_i64([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
}

pub struct Sp4Data {
    /// Sp*4(3)
    pub star: Group<M4>,
    /// Sp4(3) as a group of its own
    pub sp: Group<M4>,
    /// Sp4(3) inside Sp*4(3)
    pub sp_in_star: Subgroup,
}

fn sp_generators() -> Vec<M4> {
    let vs: [[i64; 4]; 5] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]];
    vs.iter().map(|v| transvection(&v.map(F3::new))).collect()
}

pub fn sp4_enumerate() -> Sp4Data {
    let gens = sp_generators();
    let sp = Group::closure(&gens).expect("Sp4(3) fits the cap");
    let mut star_gens = gens.clone();
    star_gens.push(similitude());
    let star = Group::closure(&star_gens).expect("Sp*4(3) fits the cap");
    let sp_in_star = star.subgroup(&gens);
    Sp4Data { star, sp, sp_in_star }
}

pub fn sp4() -> &'static Sp4Data {
    static DATA: OnceLock<Sp4Data> = OnceLock::new();
    DATA.get_or_init(sp4_enumerate)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    A3,
    B3,
    C3,
    D3,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassLabel::A3 => "3a",
            ClassLabel::B3 => "3b",
            ClassLabel::C3 => "3c",
            ClassLabel::D3 => "3d",
        };
        f.write_str(s)
    }
}

fn minus_identity(g: &M4) -> M4 {
    let mut m = g.0;
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = (row[k] + 2) % 3;
    }
    SqMat(m)
}

fn unit(k: usize) -> VecF3 {
    let mut e = vec![F3::ZERO; 4];
    e[k] = F3::ONE;
    e
}

/// b(w, gw − w), defined when gw ≠ w.
pub fn sign_invariant(g: &M4, w: &[F3]) -> Option<F3> {
    let nw = minus_identity(g).mul_vec(w);
    if nw.iter().all(|x| x.is_zero()) {
        return None;
    }
    Some(form(w, &nw))
}

/// Label of an order-3 element of Sp4(3). Jordan type {2,1,1}: 3a iff the sign
/// invariant is +1. Jordan type {2,2}: the form (u, v) ↦ b(u, (g−1)v) on a
/// complement of ker(g−1) has determinant ±1, and 3c means +1.
pub fn classify_order3(g: &M4) -> Result<ClassLabel, Error> {
    if form_sign(g) != Some(F3::ONE) {
        return Err(Error::Hypothesis("not an element of Sp4(3)".into()));
    }
    if g.is_identity() || !g.mul(g).mul(g).is_identity() {
        return Err(Error::WrongOrder);
    }
    let n = minus_identity(g);
    let jordan = linalg::jordan_partition(&g.to_mat())?;
    if jordan == vec![2, 1, 1] {
        let w = (0..4).map(unit).find(|e| !n.mul_vec(e).iter().all(|x| x.is_zero())).expect("g ≠ 1");
        let s = sign_invariant(g, &w).expect("gw ≠ w");
        return Ok(if s == F3::ONE { ClassLabel::A3 } else { ClassLabel::B3 });
    }
    let mut us: Vec<VecF3> = Vec::new();
    let mut images: Vec<VecF3> = Vec::new();
    for k in 0..4 {
        let e = unit(k);
        let ne = n.mul_vec(&e);
        let mut trial = images.clone();
        trial.push(ne);
        if linalg::span_basis(&trial, 4).len() == trial.len() {
            us.push(e);
            images = trial;
        }
    }
    let beta = MatF3::from_rows(&[
        vec![form(&us[0], &images[0]), form(&us[0], &images[1])],
        vec![form(&us[1], &images[0]), form(&us[1], &images[1])],
    ]);
    Ok(if beta.det()? == F3::ONE { ClassLabel::C3 } else { ClassLabel::D3 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCounts {
    pub sp_order: usize,
    pub star_order: usize,
    pub order3_elements: usize,
    pub class_sizes: Vec<(ClassLabel, usize)>,
    pub labels_constant_on_classes: bool,
    pub inversion_swaps_ab: bool,
    pub inversion_fixes_cd: bool,
    /// orbit sizes of ⟨[[I,X],[0,I]]⟩ for det X = 1, −1, 0
    pub subgroup_orbits: [usize; 3],
    pub lagrangians: usize,
    /// (number of Lagrangians hit, subgroups per Lagrangian) for det X = 1 and det X = −1
    pub per_lagrangian: [(usize, BTreeSet<usize>); 2],
}

fn subgroup_key(u: &M4) -> (M4, M4) {
    let u2 = u.mul(u);
    if *u <= u2 {
        (*u, u2)
    } else {
        (u2, *u)
    }
}

fn commutator_space(u: &M4) -> Vec<usize> {
    let n = minus_identity(u);
    let cols: Vec<VecF3> = (0..4).map(|k| n.mul_vec(&unit(k))).collect();
    let mut v: Vec<usize> = linalg::span(&linalg::span_basis(&cols, 4), 4).iter().map(|x| linalg::vector_index(x)).collect();
    v.sort_unstable();
    v
}

pub fn class_and_subgroup_counts() -> Result<ClassCounts, Error> {
    let d = sp4();
    let g = &d.sp;
    let whole = g.whole();
    let order3 = whole.elements_of_order(g, 3);
    let classes = group::conjugacy_classes(g, whole.gens(), &order3);
    let mut class_sizes = Vec::new();
    let mut labels_constant = true;
    let mut swaps = true;
    let mut fixes = true;
    for class in &classes {
        let label = classify_order3(g.element(class[0]))?;
        for &x in class {
            labels_constant &= classify_order3(g.element(x))? == label;
        }
        let inv = classify_order3(&g.element(class[0]).inverse()?)?;
        match label {
            ClassLabel::A3 => swaps &= inv == ClassLabel::B3,
            ClassLabel::B3 => swaps &= inv == ClassLabel::A3,
            _ => fixes &= inv == label,
        }
        class_sizes.push((label, class.len()));
    }
    class_sizes.sort();
    let gens = g.generators().to_vec();
    let act = |s: &M4, k: &(M4, M4)| subgroup_key(&s.conjugate(&k.0));
    let reps = [unipotent([[1, 0], [0, 1]]), unipotent([[1, 0], [0, -1]]), unipotent([[1, 0], [0, 0]])];
    let orbits: Vec<Vec<(M4, M4)>> = reps.iter().map(|u| orbit(&gens, subgroup_key(u), act)).collect();
    let per = |o: &Vec<(M4, M4)>| -> (usize, BTreeSet<usize>) {
        let mut count: FxHashMap<Vec<usize>, usize> = FxHashMap::default();
        for (u, _) in o {
            *count.entry(commutator_space(u)).or_default() += 1;
        }
        (count.len(), count.values().copied().collect())
    };
    Ok(ClassCounts {
        sp_order: g.len(),
        star_order: d.star.len(),
        order3_elements: order3.len(),
        class_sizes,
        labels_constant_on_classes: labels_constant,
        inversion_swaps_ab: swaps,
        inversion_fixes_cd: fixes,
        subgroup_orbits: [orbits[0].len(), orbits[1].len(), orbits[2].len()],
        lagrangians: SymplecticForm::standard(2).lagrangian_count(),
        per_lagrangian: [per(&orbits[0]), per(&orbits[1])],
    })
}

/// SL2(9) acting on F9² = F3⁴, written in a basis where the trace form
/// Tr(det(v, w)) has Gram matrix J. Also returns the base change.
pub fn sl2_9_generators() -> (Vec<M4>, MatF3) {
    let to_f9 = |v: &[F3]| [F9 { re: v[0], im: v[1] }, F9 { re: v[2], im: v[3] }];
    let det_form = |v: &[F3], w: &[F3]| {
        let (a, b) = (to_f9(v), to_f9(w));
        (a[0] * b[1] - a[1] * b[0]).trace()
    };
    let rows: Vec<VecF3> = (0..4).map(|r| (0..4).map(|c| det_form(&unit(r), &unit(c))).collect()).collect();
    let form = SymplecticForm::new(MatF3::from_rows(&rows)).expect("trace form is nondegenerate");
    let p = form.symplectic_basis();
    let pinv = p.inverse().expect("basis");
    let o = F9::ONE;
    let z = F9::ZERO;
    let gens9 = [[[o, o], [z, o]], [[o, I], [z, o]], [[o, z], [o, o]], [[o, z], [I, o]]];
    let gens = gens9
        .iter()
        .map(|m| {
            let m3 = linalg::embed_f9(&[m[0].to_vec(), m[1].to_vec()]);
            M4::from_mat(&(&(&pinv * &m3) * &p))
        })
        .collect();
    (gens, p)
}

/// diag(ζ, 1) on F9² in the same basis as [`sl2_9_generators`]; it normalizes SL2(9).
pub fn sl2_9_twist(p: &MatF3) -> M4 {
    let m3 = linalg::embed_f9(&[vec![ZETA, F9::ZERO], vec![F9::ZERO, F9::ONE]]);
    M4::from_mat(&(&(&p.inverse().expect("basis") * &m3) * p))
}

/// Embed a 2×2 matrix on the hyperbolic plane ⟨e_k, f_k⟩.
pub fn on_plane(k: usize, a: [[i64; 2]; 2]) -> M4 {
    let mut m = [[0i64; 4]; 4];
    for (r, row) in m.iter_mut().enumerate() {
        row[r] = 1;
    }
    let idx = [k, k + 2];
    for r in 0..2 {
        for c in 0..2 {
            m[idx[r]][idx[c]] = a[r][c];
        }
    }
    M4::from_i64(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupReport {
    pub name: String,
    pub order: usize,
    pub o3_trivial: bool,
    pub generated_by_3_elements: bool,
    pub in_sp4: bool,
    pub types: BTreeSet<ClassLabel>,
}

impl SubgroupReport {
    pub fn types_cd_only(&self) -> bool {
        self.types.iter().all(|t| matches!(t, ClassLabel::C3 | ClassLabel::D3))
    }
}

pub fn describe(name: &str, gens: &[M4]) -> Result<SubgroupReport, Error> {
    let h = Group::closure(gens)?;
    let whole = h.whole();
    let mut types = BTreeSet::new();
    for x in whole.elements_of_order(&h, 3) {
        types.insert(classify_order3(h.element(x))?);
    }
    Ok(SubgroupReport {
        name: name.to_string(),
        order: h.len(),
        o3_trivial: group::o_p(&h, &whole, 3).order() == 1,
        generated_by_3_elements: group::p_elements_closure(&h, &whole, 3).order() == h.len(),
        in_sp4: h.elements().iter().all(|m| form_sign(m) == Some(F3::ONE)),
        types,
    })
}

/// Subgroups of SL2(9) of the given order generated by an element of order 3 and one of order 4.
fn find_in_sl2_9(target: usize) -> Vec<M4> {
    let (gens, _) = sl2_9_generators();
    let g = Group::closure(&gens).expect("SL2(9)");
    let whole = g.whole();
    let o3 = whole.elements_of_order(&g, 3);
    let o4 = whole.elements_of_order(&g, 4);
    for &x in &o3 {
        for &y in &o4 {
            if Subgroup::generate(&g, &[x, y]).order() == target {
                return vec![*g.element(x), *g.element(y)];
            }
        }
    }
    Vec::new()
}

/// Random search for an extraspecial 2-subgroup of order 32 and minus type with center {±I}.
pub fn find_2_1_4_minus(seed: u64) -> Vec<M4> {
    let d = sp4();
    let g = &d.sp;
    let minus = M4::identity().neg();
    let candidates: Vec<M4> = g.elements().iter().copied().filter(|m| m.mul(m) == minus).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut gens = vec![candidates[rng.gen_range(0..candidates.len())]];
        for _ in 0..40 {
            let y = candidates[rng.gen_range(0..candidates.len())];
            let mut trial = gens.clone();
            trial.push(y);
            let h = Group::closure_with(M4::identity(), &trial, 64).ok();
            let Some(h) = h else { continue };
            if h.len() > 32 || !group::is_p_power(h.len(), 2) {
                continue;
            }
            gens = trial;
            if h.len() == 32 {
                let squares_one = h.elements().iter().filter(|m| m.mul(m).is_identity()).count();
                let hw = h.whole();
                if hw.center(&h).order() == 2 && squares_one == 12 {
                    return gens;
                }
                break;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Out3Report {
    pub sl2_9: SubgroupReport,
    pub two_a4: [SubgroupReport; 2],
    pub two_a5: [SubgroupReport; 2],
    pub q8q8c3: [SubgroupReport; 2],
    pub two_1_4_a5: SubgroupReport,
    pub extraspecial_order: usize,
}

pub fn construct_2a4_2a5_q8q8_2a6(seed: u64) -> Result<Out3Report, Error> {
    let (sl, p) = sl2_9_generators();
    let twist = sl2_9_twist(&p);
    let twisted = |gens: &[M4]| -> Vec<M4> { gens.iter().map(|m| twist.conjugate(m)).collect() };
    let a4 = find_in_sl2_9(24);
    let a5 = find_in_sl2_9(120);
    let q8 = [[[0, 1], [-1, 0]], [[1, 1], [1, -1]]];
    let u = [[1, 1], [0, 1]];
    let u_inv = [[1, -1], [0, 1]];
    let mut q8q8: Vec<M4> = Vec::new();
    for k in 0..2 {
        for a in q8 {
            q8q8.push(on_plane(k, a));
        }
    }
    let with = |c: M4| -> Vec<M4> {
        let mut g = q8q8.clone();
        g.push(c);
        g
    };
    let diag_c = on_plane(0, u).mul(&on_plane(1, u));
    let diag_d = on_plane(0, u).mul(&on_plane(1, u_inv));
    let e = find_2_1_4_minus(seed);
    let d = sp4();
    let eh = d.sp.subgroup(&e);
    let n = d.sp.whole().normalizer(&d.sp, &eh);
    let n_gens: Vec<M4> = n.gens().iter().map(|&k| *d.sp.element(k)).collect();
    Ok(Out3Report {
        sl2_9: describe("2A6", &sl)?,
        two_a4: [describe("2A4", &a4)?, describe("2A4'", &twisted(&a4))?],
        two_a5: [describe("2A5", &a5)?, describe("2A5'", &twisted(&a5))?],
        q8q8c3: [describe("(Q8xQ8):3", &with(diag_c))?, describe("(Q8xQ8):3'", &with(diag_d))?],
        two_1_4_a5: describe("2^(1+4).A5", &n_gens)?,
        extraspecial_order: eh.order(),
    })
}

/// 3^{1+4}_+ as pairs (v, z), v ∈ F3⁴, z ∈ F3, with (v,z)(w,z') = (v+w, z+z'−b(v,w)),
/// so that [(v,0),(w,0)] = (0, b(v,w)). Index 3·idx(v) + z.
pub struct Extraspecial {
    pub group: TableGroup,
}

impl Extraspecial {
    pub fn new() -> Extraspecial {
        let vs: Vec<VecF3> = linalg::all_vectors(4);
        let group = TableGroup::from_fn(243, |x, y| {
            let (v, z) = (&vs[x / 3], F3::new((x % 3) as i64));
            let (w, z2) = (&vs[y / 3], F3::new((y % 3) as i64));
            let s = linalg::add_vec(v, w);
            let c = z + z2 - form(v, w);
            3 * linalg::vector_index(&s) + c.value() as usize
        });
        Extraspecial { group }
    }

    pub fn elem(v: &[F3], z: F3) -> usize {
        3 * linalg::vector_index(v) + z.value() as usize
    }
}

impl Default for Extraspecial {
    fn default() -> Self {
        Extraspecial::new()
    }
}

pub fn extraspecial() -> &'static Extraspecial {
    static Q: OnceLock<Extraspecial> = OnceLock::new();
    Q.get_or_init(Extraspecial::new)
}

/// An automorphism of 3^{1+4}_+ as an image table, with the map it induces on Q/Z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutLift {
    pub images: Vec<usize>,
    pub matrix: M4,
    pub sign: F3,
}

impl AutLift {
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn compose(&self, other: &AutLift) -> AutLift {
        AutLift {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
            matrix: self.matrix.mul(&other.matrix),
            sign: self.sign * other.sign,
        }
    }

    pub fn is_automorphism(&self) -> bool {
        let g = &extraspecial().group;
        let mut seen = vec![false; 243];
        for &y in &self.images {
            seen[y] = true;
        }
        seen.iter().all(|&b| b) && (0..243).all(|x| (0..243).all(|y| self.images[g.mul(x, y)] == g.mul(self.images[x], self.images[y])))
    }

    /// Induced map on Q/Z equals `matrix` and the action on Z is multiplication by `sign`.
    pub fn induces(&self) -> bool {
        linalg::all_vectors(4).iter().all(|v| self.images[Extraspecial::elem(v, F3::ZERO)] / 3 == linalg::vector_index(&self.matrix.mul_vec(v)))
            && F3::all().iter().all(|&z| self.images[Extraspecial::elem(&[F3::ZERO; 4], z)] == Extraspecial::elem(&[F3::ZERO; 4], self.sign * z))
    }
}

/// The automorphism (v, z) ↦ (gv, s·z) for g ∈ Sp*4(3) of sign s.
pub fn lift_to_aut_extraspecial(g: &M4) -> Result<AutLift, Error> {
    let sign = form_sign(g).ok_or_else(|| Error::Hypothesis("matrix does not preserve the form up to sign".into()))?;
    let images = (0..243)
        .map(|x| {
            let v = linalg::vector_from_index(x / 3, 4);
            Extraspecial::elem(&g.mul_vec(&v), sign * F3::new((x % 3) as i64))
        })
        .collect();
    Ok(AutLift { images, matrix: *g, sign })
}

/// Whether α agrees with conjugation by some element of Q.
pub fn is_inner(alpha: &AutLift) -> bool {
    let g = &extraspecial().group;
    let gens: Vec<usize> = (0..4).map(|k| Extraspecial::elem(&unit(k), F3::ZERO)).collect();
    (0..243).any(|q| gens.iter().all(|&x| alpha.apply(x) == g.conj(q, x)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    pub tested: usize,
    pub automorphisms: bool,
    pub induced_maps: bool,
    pub composition_inner: bool,
    pub minus_identity_fixes_z: bool,
    pub similitude_inverts_z: bool,
    pub incompatible_rejected: bool,
}

pub fn lift_report(samples: usize, seed: u64) -> LiftReport {
    let d = sp4();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut automorphisms = true;
    let mut induced = true;
    let mut inner = true;
    for _ in 0..samples {
        let g = d.star.element(rng.gen_range(0..d.star.len()));
        let h = d.star.element(rng.gen_range(0..d.star.len()));
        let lg = lift_to_aut_extraspecial(g).expect("in Sp*");
        let lh = lift_to_aut_extraspecial(h).expect("in Sp*");
        let lgh = lift_to_aut_extraspecial(&g.mul(h)).expect("in Sp*");
        automorphisms &= lg.is_automorphism();
        induced &= lg.induces();
        let back = AutLift {
            images: (0..243).map(|x| lgh.images.iter().position(|&y| y == x).unwrap()).collect(),
            matrix: lgh.matrix.inverse().expect("invertible"),
            sign: lgh.sign,
        };
        inner &= is_inner(&back.compose(&lg.compose(&lh)));
    }
    let minus = lift_to_aut_extraspecial(&M4::identity().neg()).expect("−I ∈ Sp");
    let sim = lift_to_aut_extraspecial(&similitude()).expect("sign −1");
    let zgen = Extraspecial::elem(&[F3::ZERO; 4], F3::ONE);
    LiftReport {
        tested: samples,
        automorphisms: automorphisms && minus.is_automorphism() && sim.is_automorphism(),
        induced_maps: induced,
        composition_inner: inner,
        minus_identity_fixes_z: minus.apply(zgen) == zgen && minus.induces(),
        similitude_inverts_z: sim.apply(zgen) == Extraspecial::elem(&[F3::ZERO; 4], F3::MINUS_ONE),
        incompatible_rejected: lift_to_aut_extraspecial(&M4::from_i64([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])).is_err(),
    }
}

/// UT3(q) for q ∈ {3, 9}: triples (x, y, z) ↔ [[1,x,z],[0,1,y],[0,0,1]].
#[derive(Clone, Debug)]
pub struct Ut3 {
    pub q: usize,
    field: Vec<F9>,
    position: [usize; 9],
}

impl Ut3 {
    pub fn new(q: usize) -> Result<Ut3, Error> {
        let field: Vec<F9> = match q {
            3 => F3::all().iter().map(|&a| F9::from_f3(a)).collect(),
            9 => F9::all().collect(),
            _ => return Err(Error::Shape(format!("UT3(q) is built for q = 3 or 9, not {q}"))),
        };
        let mut position = [usize::MAX; 9];
        for (k, x) in field.iter().enumerate() {
            position[x.index()] = k;
        }
        Ok(Ut3 { q, field, position })
    }

    pub fn order(&self) -> usize {
        self.q.pow(3)
    }

    pub fn field(&self) -> &[F9] {
        &self.field
    }

    pub fn elem(&self, x: F9, y: F9, z: F9) -> usize {
        let p = |a: F9| self.position[a.index()];
        p(x) + self.q * p(y) + self.q * self.q * p(z)
    }

    pub fn coords(&self, k: usize) -> (F9, F9, F9) {
        let q = self.q;
        (self.field[k % q], self.field[k / q % q], self.field[k / (q * q)])
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y, z) = self.coords(a);
        let (x2, y2, z2) = self.coords(b);
        self.elem(x + x2, y + y2, z + z2 + x * y2)
    }

    /// F3-basis of the F_q-span of 1 (and i when q = 9).
    fn basis(&self) -> Vec<F9> {
        if self.q == 3 {
            vec![F9::ONE]
        } else {
            vec![F9::ONE, I]
        }
    }

    /// Generators (b,0,0) and (0,b,0) over the F3-basis.
    pub fn generators(&self) -> Vec<usize> {
        let z = F9::ZERO;
        let b = self.basis();
        b.iter().map(|&x| self.elem(x, z, z)).chain(b.iter().map(|&y| self.elem(z, y, z))).collect()
    }

    pub fn table(&self, f: impl Fn(F9, F9, F9) -> (F9, F9, F9)) -> Vec<u32> {
        (0..self.order())
            .map(|k| {
                let (x, y, z) = self.coords(k);
                let (a, b, c) = f(x, y, z);
                self.elem(a, b, c) as u32
            })
            .collect()
    }

    /// Bijective and multiplicative (checked on all x and all generators y).
    pub fn is_automorphism(&self, t: &[u32]) -> bool {
        let mut seen = vec![false; t.len()];
        for &y in t {
            seen[y as usize] = true;
        }
        let gens = self.generators();
        seen.iter().all(|&b| b)
            && (0..self.order()).all(|x| gens.iter().all(|&y| t[self.mul(x, y)] as usize == self.mul(t[x] as usize, t[y] as usize)))
    }

    /// α_M for M = [[r,s],[t,u]] ∈ GL2(q).
    pub fn alpha_m(&self, m: [[F9; 2]; 2]) -> Vec<u32> {
        let [[r, s], [t, u]] = m;
        let half = F9::new(2, 0);
        self.table(|x, y, z| {
            let z2 = half * (r * t * x * x + s * u * y * y) + r * u * z + s * t * (x * y - z);
            (r * x + s * y, t * x + u * y, z2)
        })
    }

    pub fn frobenius(&self) -> Vec<u32> {
        self.table(|x, y, z| (x.conj(), y.conj(), z.conj()))
    }

    /// g ↦ g·χ(g) for χ given by its values on the F3-generators.
    pub fn central_twist(&self, values: &[F9]) -> Vec<u32> {
        let b = self.basis();
        let m = b.len();
        self.table(|x, y, z| {
            let cx = [x.re, x.im];
            let cy = [y.re, y.im];
            let mut c = z;
            for k in 0..m {
                c = c + values[k] * cx[k] + values[m + k] * cy[k];
            }
            (x, y, c)
        })
    }

    /// Permutation induced on Q/Z = {(x, y)}.
    pub fn on_quotient(&self, t: &[u32]) -> Perm {
        let q = self.q;
        Perm::from_images(&(0..q * q).map(|k| t[self.elem(self.field[k % q], self.field[k / q], F9::ZERO)] as usize % (q * q)).collect::<Vec<_>>())
    }
}

pub fn compose_tables(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&y| a[y as usize]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ut3Report {
    pub q: usize,
    pub kernel_order: usize,
    pub kernel_rank: u32,
    pub kernel_elementary_abelian: bool,
    pub lifts_are_automorphisms: bool,
    pub image_order: usize,
    /// α|_Z = Id ⇔ Ψ(α) linear of determinant 1, over all lifts
    pub z_fixed_iff_sl: bool,
    pub gamma_involution: bool,
    pub gamma_inverts_kernel: bool,
    pub samples: usize,
    pub unique_commuting_lifts: usize,
}

fn gl2_all(field: &[F9]) -> Vec<[[F9; 2]; 2]> {
    let mut out = Vec::new();
    for &r in field {
        for &s in field {
            for &t in field {
                for &u in field {
                    if !(r * u - s * t).is_zero() {
                        out.push([[r, s], [t, u]]);
                    }
                }
            }
        }
    }
    out
}

pub fn ut3_aut_suite(q: usize, samples: usize, seed: u64) -> Result<Ut3Report, Error> {
    let u3 = Ut3::new(q)?;
    let m = if q == 3 { 1 } else { 2 };
    let field = u3.field().to_vec();
    // Hom(Q/Z, Z): values of χ on the 2m generators, each in F_q
    let mut kernel: Vec<Vec<u32>> = Vec::new();
    let n_chi = field.len().pow(2 * m as u32);
    for code in 0..n_chi {
        let mut c = code;
        let values: Vec<F9> = (0..2 * m)
            .map(|_| {
                let v = field[c % field.len()];
                c /= field.len();
                v
            })
            .collect();
        let t = u3.central_twist(&values);
        if u3.is_automorphism(&t) && u3.on_quotient(&t).is_identity() {
            kernel.push(t);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kernel_set: FxHashSet<Vec<u32>> = kernel.iter().cloned().collect();
    let identity: Vec<u32> = (0..u3.order() as u32).collect();
    let kernel_elementary_abelian = (0..200).all(|_| {
        let a = &kernel[rng.gen_range(0..kernel.len())];
        let b = &kernel[rng.gen_range(0..kernel.len())];
        let ab = compose_tables(a, b);
        ab == compose_tables(b, a) && kernel_set.contains(&ab) && compose_tables(a, &compose_tables(a, a)) == identity
    });
    let o = F9::ONE;
    let z = F9::ZERO;
    let prim = if q == 3 { F9::new(-1, 0) } else { ZETA };
    let gens_m = [[[prim, z], [z, o]], [[o, o], [z, o]], [[z, o], [o, z]]];
    let mut lifts: Vec<Vec<u32>> = gens_m.iter().map(|&mm| u3.alpha_m(mm)).collect();
    if q == 9 {
        lifts.push(u3.frobenius());
    }
    let lifts_are_automorphisms = lifts.iter().all(|t| u3.is_automorphism(t));
    let image = Group::closure(&lifts.iter().map(|t| u3.on_quotient(t)).collect::<Vec<_>>())?;
    let zgen = u3.elem(z, z, o);
    // z·i only lies in the field when q = 9
    let zi = (q == 9).then(|| u3.elem(z, z, I));
    let all_m = gl2_all(&field);
    let frob = u3.frobenius();
    let mut z_fixed_iff_sl = true;
    for mm in &all_m {
        let a = u3.alpha_m(*mm);
        let det = mm[0][0] * mm[1][1] - mm[0][1] * mm[1][0];
        let variants: Vec<(Vec<u32>, bool)> =
            if q == 9 { vec![(a.clone(), false), (compose_tables(&a, &frob), true)] } else { vec![(a, false)] };
        for (t, twisted) in variants {
            let fixes = t[zgen] as usize == zgen && zi.is_none_or(|zi| t[zi] as usize == zi);
            z_fixed_iff_sl &= fixes == (!twisted && det == o);
        }
    }
    let minus = F9::new(-1, 0);
    let gamma = u3.alpha_m([[minus, z], [z, minus]]);
    let gamma_involution = compose_tables(&gamma, &gamma) == identity;
    let gamma_inverts_kernel = kernel.iter().all(|b| {
        let conj = compose_tables(&gamma, &compose_tables(b, &gamma));
        compose_tables(&conj, b) == identity
    });
    let gens = u3.generators();
    let mut unique = 0;
    for _ in 0..samples {
        let mm = all_m[rng.gen_range(0..all_m.len())];
        let mut a = u3.alpha_m(mm);
        if q == 9 && rng.gen_bool(0.5) {
            a = compose_tables(&a, &frob);
        }
        let count = kernel
            .iter()
            .filter(|b| gens.iter().all(|&x| a[b[gamma[x] as usize] as usize] == gamma[a[b[x] as usize] as usize]))
            .count();
        unique += (count == 1) as usize;
    }
    Ok(Ut3Report {
        q,
        kernel_order: kernel.len(),
        kernel_rank: pgroups::log3(kernel.len()),
        kernel_elementary_abelian,
        lifts_are_automorphisms,
        image_order: image.len(),
        z_fixed_iff_sl,
        gamma_involution,
        gamma_inverts_kernel,
        samples,
        unique_commuting_lifts: unique,
    })
}

/// The M11-case special subgroup Q ≅ UT3(9) via ⟪a, b, z⟫ ↦ (b, a, z).
pub fn ut3_9_matches_m11_q() -> bool {
    let u3 = Ut3::new(9).expect("q = 9");
    let s = pgroups::s_group(Case::M11);
    let to_s = |k: usize| {
        let (x, y, z) = u3.coords(k);
        pgroups::qtriple_to_s(Case::M11, QTriple::new(y, x, z))
    };
    let images: Vec<usize> = (0..u3.order()).map(to_s).collect();
    let q = match pgroups::unique_special_q(Case::M11) {
        Ok(r) => r.q,
        Err(_) => None,
    };
    let mut sorted = images.clone();
    sorted.sort_unstable();
    let same_set = q.is_some_and(|q| q.members() == sorted.as_slice());
    same_set && (0..u3.order()).all(|a| (0..u3.order()).all(|b| images[u3.mul(a, b)] == s.mul(images[a], images[b])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let d = sp4();
        assert_eq!(d.sp.len(), 51840);
        assert_eq!(d.star.len(), 103680);
        assert_eq!(d.sp_in_star.order(), 51840);
        assert_eq!(form_sign(&M4::identity()), Some(F3::ONE));
        assert!(d.sp.contains(&M4::identity().neg()));
    }

    #[test]
    fn labels() {
        assert_eq!(classify_order3(&unipotent([[1, 0], [0, 1]])).unwrap(), ClassLabel::C3);
        assert_eq!(classify_order3(&unipotent([[1, 0], [0, -1]])).unwrap(), ClassLabel::D3);
        let l = classify_order3(&unipotent([[1, 0], [0, 0]])).unwrap();
        assert!(matches!(l, ClassLabel::A3 | ClassLabel::B3));
        assert_eq!(linalg::jordan_partition(&unipotent([[1, 0], [0, 0]]).to_mat()).unwrap(), vec![2, 1, 1]);
        assert!(matches!(classify_order3(&M4::identity()), Err(Error::WrongOrder)));
        assert!(classify_order3(&similitude()).is_err());
    }

    #[test]
    fn class_counts() {
        let c = class_and_subgroup_counts().unwrap();
        assert_eq!(c.class_sizes.len(), 4);
        let labels: BTreeSet<ClassLabel> = c.class_sizes.iter().map(|x| x.0).collect();
        assert_eq!(labels.len(), 4);
        assert!(c.labels_constant_on_classes && c.inversion_swaps_ab && c.inversion_fixes_cd);
        assert_eq!(c.subgroup_orbits, [120, 240, 40]);
        assert_eq!(c.lagrangians, 40);
        assert_eq!(c.per_lagrangian[0], (40, BTreeSet::from([3])));
        assert_eq!(c.per_lagrangian[1], (40, BTreeSet::from([6])));
    }

    #[test]
    fn sign_invariant_independent_of_witness() {
        let d = sp4();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ab: Vec<&M4> = d
            .sp
            .elements()
            .iter()
            .filter(|m| m.order() == 3 && linalg::jordan_partition(&m.to_mat()).unwrap() == vec![2, 1, 1])
            .collect();
        for _ in 0..50 {
            let g = ab[rng.gen_range(0..ab.len())];
            let vals: BTreeSet<F3> = linalg::all_vectors(4).iter().filter_map(|w| sign_invariant(g, w)).collect();
            assert_eq!(vals.len(), 1);
        }
    }

    #[test]
    fn conjugation_invariance() {
        let d = sp4();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let o3: Vec<&M4> = d.sp.elements().iter().filter(|m| m.order() == 3).collect();
        for _ in 0..1000 {
            let g = o3[rng.gen_range(0..o3.len())];
            let h = d.sp.element(rng.gen_range(0..d.sp.len()));
            assert_eq!(classify_order3(g).unwrap(), classify_order3(&h.conjugate(g)).unwrap());
        }
    }

    #[test]
    fn subgroups() {
        let r = construct_2a4_2a5_q8q8_2a6(1).unwrap();
        assert_eq!(r.sl2_9.order, 720);
        assert_eq!(r.sl2_9.types, BTreeSet::from([ClassLabel::C3, ClassLabel::D3]));
        for (pair, order) in [(&r.two_a4, 24), (&r.two_a5, 120), (&r.q8q8c3, 192)] {
            assert_eq!(pair[0].order, order);
            assert_eq!(pair[1].order, order);
            assert_eq!(pair[0].types.len(), 1);
            assert_eq!(pair[1].types.len(), 1);
            assert_ne!(pair[0].types, pair[1].types);
            for s in pair {
                assert!(s.types_cd_only() && s.o3_trivial && s.generated_by_3_elements && s.in_sp4, "{s:?}");
            }
        }
        assert_eq!(r.extraspecial_order, 32);
        assert_eq!(r.two_1_4_a5.order, 1920);
        assert!(r.two_1_4_a5.types_cd_only() && r.two_1_4_a5.o3_trivial && r.two_1_4_a5.generated_by_3_elements);
    }

    #[test]
    fn lifts() {
        let r = lift_report(20, 3);
        assert!(r.automorphisms && r.induced_maps && r.composition_inner);
        assert!(r.minus_identity_fixes_z && r.similitude_inverts_z && r.incompatible_rejected);
        let id = lift_to_aut_extraspecial(&M4::identity()).unwrap();
        assert_eq!(id.images, (0..243).collect::<Vec<_>>());
    }

    #[test]
    fn ut3_q3() {
        let r = ut3_aut_suite(3, 100, 9).unwrap();
        assert_eq!((r.kernel_order, r.kernel_rank), (9, 2));
        assert!(r.kernel_elementary_abelian && r.lifts_are_automorphisms && r.z_fixed_iff_sl);
        assert_eq!(r.image_order, 48);
        assert!(r.gamma_involution && r.gamma_inverts_kernel);
        assert_eq!(r.unique_commuting_lifts, 100);
    }

    #[test]
    fn ut3_q9() {
        let r = ut3_aut_suite(9, 100, 9).unwrap();
        assert_eq!((r.kernel_order, r.kernel_rank), (6561, 8));
        assert!(r.kernel_elementary_abelian && r.lifts_are_automorphisms && r.z_fixed_iff_sl);
        assert_eq!(r.image_order, 11520);
        assert!(r.gamma_involution && r.gamma_inverts_kernel);
        assert_eq!(r.unique_commuting_lifts, 100);
        assert!(Ut3::new(5).is_err());
    }

    #[test]
    fn ut3_9_is_m11_q() {
        assert!(ut3_9_matches_m11_q());
    }
}
