//! Finite groups by full enumeration.
//!
//! [`Group`] closes a set of concrete elements (monomial maps, matrices,
//! permutations) under composition. Every enumerated group, and every
//! [`TableGroup`], exposes its elements as indices through [`FiniteGroup`];
//! [`Subgroup`] and the algorithms built on it only ever see indices.

use std::collections::VecDeque;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::OnceLock;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::linalg::SqMat;
use crate::Error;

pub const DEFAULT_CAP: usize = 1 << 21;

/// A concrete group element; `compose(a, b)` applies `b` first.
pub trait GroupElement: Clone + Eq + Hash + Ord + Debug + Send + Sync {
    fn compose(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// `self · x · self⁻¹`
    fn conjugate(&self, x: &Self) -> Self {
        self.compose(x).compose(&self.inverse())
    }

    fn pow(&self, n: u64) -> Self {
        let mut acc = self.identity_like();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    fn order(&self) -> usize {
        let mut x = self.clone();
        let mut n = 1;
        while !x.is_identity() {
            x = x.compose(self);
            n += 1;
        }
        n
    }
}

/// Permutation of `0..n`; `p.0[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u16).collect())
    }

    pub fn from_images(images: &[usize]) -> Perm {
        Perm(images.iter().map(|&x| x as u16).collect())
    }

    /// Build from disjoint cycles on `0..n`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Perm {
        let mut p: Vec<u16> = (0..n as u16).collect();
        for cyc in cycles {
            for k in 0..cyc.len() {
                p[cyc[k]] = cyc[(k + 1) % cyc.len()] as u16;
            }
        }
        Perm(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }
}

impl GroupElement for Perm {
    fn compose(&self, rhs: &Perm) -> Perm {
        Perm(rhs.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm(inv)
    }

    fn identity_like(&self) -> Perm {
        Perm::identity(self.0.len())
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }
}

/// Index-level access to a finite group.
pub trait FiniteGroup: Sync {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, x: usize, y: usize) -> usize;
    fn inv(&self, x: usize) -> usize;

    /// `g · x · g⁻¹`
    fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[x, y] = x · y · x⁻¹ · y⁻¹`
    fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    fn pow(&self, x: usize, n: u64) -> usize {
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.mul(acc, x);
        }
        acc
    }

    fn element_order(&self, x: usize) -> usize {
        let id = self.identity();
        let mut y = x;
        let mut n = 1;
        while y != id {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }
}

/// An enumerated group of concrete elements.
#[derive(Clone, Debug)]
pub struct Group<E: GroupElement> {
    elements: Vec<E>,
    index: FxHashMap<E, u32>,
    gens: Vec<E>,
    id: usize,
    inverses: OnceLock<Vec<u32>>,
}

impl<E: GroupElement> Group<E> {
    /// Breadth-first closure of `gens`; each frontier is sorted before expansion.
    pub fn closure(gens: &[E]) -> Result<Group<E>, Error> {
        let identity = gens.first().expect("at least one generator").identity_like();
        Group::closure_with(identity, gens, DEFAULT_CAP)
    }

    pub fn closure_with(identity: E, gens: &[E], cap: usize) -> Result<Group<E>, Error> {
        let mut index = FxHashMap::default();
        index.insert(identity.clone(), 0u32);
        let mut elements = vec![identity];
        let mut frontier = elements.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for s in gens {
                    let y = s.compose(x);
                    if !index.contains_key(&y) {
                        if elements.len() >= cap {
                            return Err(Error::ClosureCap { cap });
                        }
                        index.insert(y.clone(), elements.len() as u32);
                        elements.push(y.clone());
                        next.push(y);
                    }
                }
            }
            next.sort();
            frontier = next;
        }
        Ok(Group { elements, index, gens: gens.to_vec(), id: 0, inverses: OnceLock::new() })
    }

    /// Wrap an element list already known to be a group.
    pub fn from_elements(elements: Vec<E>, gens: Vec<E>) -> Group<E> {
        let index: FxHashMap<E, u32> = elements.iter().enumerate().map(|(k, e)| (e.clone(), k as u32)).collect();
        let id = elements.iter().position(|e| e.is_identity()).expect("identity present");
        Group { elements, index, gens, id, inverses: OnceLock::new() }
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn generators(&self) -> &[E] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &E) -> bool {
        self.index.contains_key(x)
    }

    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).map(|&k| k as usize)
    }

    pub fn element(&self, k: usize) -> &E {
        &self.elements[k]
    }

    pub fn indices(&self, xs: &[E]) -> Vec<usize> {
        xs.iter().map(|x| self.index_of(x).expect("element of group")).collect()
    }

    /// Materialize an index subgroup as a group of its own.
    pub fn restrict(&self, sub: &Subgroup) -> Group<E> {
        let elements: Vec<E> = sub.members().iter().map(|&k| self.elements[k].clone()).collect();
        let gens = sub.gens().iter().map(|&k| self.elements[k].clone()).collect();
        Group::from_elements(elements, gens)
    }

    pub fn whole(&self) -> Subgroup {
        let gens = self.indices(&self.gens);
        Subgroup::from_parts((0..self.len()).collect(), gens, self.len())
    }

    pub fn subgroup(&self, gens: &[E]) -> Subgroup {
        Subgroup::generate(self, &self.indices(gens))
    }

    pub fn members_of(&self, sub: &Subgroup) -> Vec<E> {
        sub.members().iter().map(|&k| self.elements[k].clone()).collect()
    }
}

impl<E: GroupElement> FiniteGroup for Group<E> {
    fn order(&self) -> usize {
        self.elements.len()
    }

    fn identity(&self) -> usize {
        self.id
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let z = self.elements[x].compose(&self.elements[y]);
        self.index[&z] as usize
    }

    fn inv(&self, x: usize) -> usize {
        let table = self.inverses.get_or_init(|| self.elements.iter().map(|e| self.index[&e.inverse()]).collect());
        table[x] as usize
    }
}

impl<const N: usize> GroupElement for SqMat<N> {
    fn compose(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn inverse(&self) -> Self {
        SqMat::inverse(self).expect("invertible matrix")
    }

    fn identity_like(&self) -> Self {
        SqMat::identity()
    }
}

/// A group given by its Cayley table.
#[derive(Clone, Debug)]
pub struct TableGroup {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    id: usize,
}

impl TableGroup {
    pub fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> TableGroup {
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = mul(x, y) as u32;
            }
        }
        let id = (0..n).find(|&e| (0..n).all(|x| table[e * n + x] as usize == x)).expect("identity");
        let inverse = (0..n).map(|x| (0..n).find(|&y| table[x * n + y] as usize == id).expect("inverse") as u32).collect();
        TableGroup { n, table, inverse, id }
    }
}

impl FiniteGroup for TableGroup {
    fn order(&self) -> usize {
        self.n
    }

    fn identity(&self) -> usize {
        self.id
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }
}

/// Subgroup of an index group, stored as a sorted member list with a
/// membership mask and a generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Subgroup) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_parts(mut members: Vec<usize>, gens: Vec<usize>, n: usize) -> Subgroup {
        members.sort_unstable();
        let mut mask = vec![false; n];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { members, mask, gens }
    }

    pub fn generate<G: FiniteGroup + ?Sized>(g: &G, gens: &[usize]) -> Subgroup {
        let n = g.order();
        let mut mask = vec![false; n];
        let id = g.identity();
        mask[id] = true;
        let mut members = vec![id];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &s in gens {
                let y = g.mul(s, x);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        let mut gens: Vec<usize> = gens.iter().copied().filter(|&s| s != id).collect();
        gens.sort_unstable();
        gens.dedup();
        Subgroup { members, mask, gens }
    }

    /// Trusts that `members` is closed; picks a generating set greedily.
    pub fn from_members<G: FiniteGroup + ?Sized>(g: &G, mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        let mut gens = Vec::new();
        let mut current = Subgroup::generate(g, &gens);
        for &m in &members {
            if !current.contains(m) {
                gens.push(m);
                current = Subgroup::generate(g, &gens);
            }
        }
        debug_assert_eq!(current.members, members, "member list is not a subgroup");
        current
    }

    pub fn trivial<G: FiniteGroup + ?Sized>(g: &G) -> Subgroup {
        Subgroup::generate(g, &[])
    }

    pub fn whole<G: FiniteGroup + ?Sized>(g: &G) -> Subgroup {
        Subgroup::from_members(g, (0..g.order()).collect())
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian<G: FiniteGroup + ?Sized>(&self, g: &G) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Elements of `self` commuting with every element of `set`.
    pub fn centralizer<G: FiniteGroup + ?Sized>(&self, g: &G, set: &[usize]) -> Subgroup {
        let members = self.members.iter().copied().filter(|&x| set.iter().all(|&s| g.mul(x, s) == g.mul(s, x))).collect();
        Subgroup::from_members(g, members)
    }

    pub fn center<G: FiniteGroup + ?Sized>(&self, g: &G) -> Subgroup {
        self.centralizer(g, &self.gens.clone())
    }

    /// Elements of `self` normalizing `h`.
    pub fn normalizer<G: FiniteGroup + ?Sized>(&self, g: &G, h: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&x| h.gens.iter().all(|&s| h.contains(g.conj(x, s)))).collect();
        Subgroup::from_members(g, members)
    }

    pub fn is_normal_in<G: FiniteGroup + ?Sized>(&self, g: &G, big: &Subgroup) -> bool {
        big.gens.iter().all(|&x| self.gens.iter().all(|&s| self.contains(g.conj(x, s))))
    }

    /// Smallest subgroup of `self` containing `set` and normalized by `self`.
    pub fn normal_closure<G: FiniteGroup + ?Sized>(&self, g: &G, set: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = set.to_vec();
        loop {
            let h = Subgroup::generate(g, &gens);
            let extra: Vec<usize> = self
                .gens
                .iter()
                .flat_map(|&x| h.gens.iter().map(move |&s| (x, s)))
                .map(|(x, s)| g.conj(x, s))
                .filter(|&y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return h;
            }
            gens = h.gens.clone();
            gens.extend(extra);
        }
    }

    pub fn derived<G: FiniteGroup + ?Sized>(&self, g: &G) -> Subgroup {
        let comms: Vec<usize> =
            self.gens.iter().flat_map(|&a| self.gens.iter().map(move |&b| (a, b))).map(|(a, b)| g.comm(a, b)).collect();
        self.normal_closure(g, &comms)
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join<G: FiniteGroup + ?Sized>(&self, g: &G, other: &Subgroup) -> Subgroup {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Subgroup::generate(g, &gens)
    }

    pub fn intersection<G: FiniteGroup + ?Sized>(&self, g: &G, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::from_members(g, members)
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        let (small, big) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        small.members.iter().filter(|&&x| big.contains(x)).count()
    }

    /// `x · self · x⁻¹`
    pub fn conjugate<G: FiniteGroup + ?Sized>(&self, g: &G, x: usize) -> Subgroup {
        let members = self.members.iter().map(|&m| g.conj(x, m)).collect();
        let gens = self.gens.iter().map(|&m| g.conj(x, m)).collect();
        Subgroup::from_parts(members, gens, g.order())
    }

    pub fn exponent<G: FiniteGroup + ?Sized>(&self, g: &G) -> usize {
        self.members.iter().fold(1, |acc, &x| lcm(acc, g.element_order(x)))
    }

    pub fn elements_of_order<G: FiniteGroup + ?Sized>(&self, g: &G, n: usize) -> Vec<usize> {
        self.members.iter().copied().filter(|&x| g.element_order(x) == n).collect()
    }

    /// Frattini subgroup of a p-group: derived subgroup times p-th powers.
    pub fn frattini_p<G: FiniteGroup + ?Sized>(&self, g: &G, p: usize) -> Subgroup {
        let mut gens = self.derived(g).gens.clone();
        let mut powers: Vec<usize> = self.members.iter().map(|&x| g.pow(x, p as u64)).collect();
        powers.sort_unstable();
        powers.dedup();
        gens.extend(powers);
        Subgroup::generate(g, &gens)
    }

    /// Subgroup generated by the elements of order p.
    pub fn omega1<G: FiniteGroup + ?Sized>(&self, g: &G, p: usize) -> Subgroup {
        Subgroup::generate(g, &self.elements_of_order(g, p))
    }

    /// Left-coset labels `x ↦ xH` for `x` in `self`; also returns one representative per coset.
    pub fn coset_labels<G: FiniteGroup + ?Sized>(&self, g: &G, h: &Subgroup) -> (FxHashMap<usize, usize>, Vec<usize>) {
        let mut label = FxHashMap::default();
        let mut reps = Vec::new();
        for &x in &self.members {
            if label.contains_key(&x) {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &y in &h.members {
                label.insert(g.mul(x, y), c);
            }
        }
        (label, reps)
    }

    /// Cayley table of `self / n` for a normal subgroup `n`.
    pub fn quotient<G: FiniteGroup + ?Sized>(&self, g: &G, n: &Subgroup) -> TableGroup {
        let (label, reps) = self.coset_labels(g, n);
        TableGroup::from_fn(reps.len(), |a, b| label[&g.mul(reps[a], reps[b])])
    }

    /// Permutations induced by the generators of `self` on the left cosets of `h`.
    pub fn coset_action<G: FiniteGroup + ?Sized>(&self, g: &G, h: &Subgroup) -> Vec<Perm> {
        let (label, reps) = self.coset_labels(g, h);
        self.gens
            .iter()
            .map(|&s| Perm(reps.iter().map(|&r| label[&g.mul(s, r)] as u16).collect()))
            .collect()
    }

    /// Whether `self` permutes the cosets of `h` primitively (so `h` is maximal).
    pub fn is_primitive_on_cosets<G: FiniteGroup + ?Sized>(&self, g: &G, h: &Subgroup) -> Result<bool, Error> {
        if h.order() == self.order() {
            return Err(Error::IndexOne);
        }
        let gens = self.coset_action(g, h);
        Ok(is_primitive(&gens, self.order() / h.order()))
    }
}

/// Primitivity of a transitive permutation group by minimal block computation.
pub fn is_primitive(gens: &[Perm], n: usize) -> bool {
    (1..n).all(|w| minimal_block(gens, n, w).len() == n)
}

/// Smallest block containing the points 0 and `w`.
pub fn minimal_block(gens: &[Perm], n: usize, w: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut queue = VecDeque::new();
    parent[w] = 0;
    queue.push_back((0usize, w));
    while let Some((a, b)) = queue.pop_front() {
        for s in gens {
            let (x, y) = (s.apply(a), s.apply(b));
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[ry] = rx;
                queue.push_back((x, y));
            }
        }
    }
    let r0 = find(&mut parent, 0);
    (0..n).filter(|&x| find(&mut parent, x) == r0).collect()
}

/// Orbit of `start` under the action generated by `gens`, in discovery order.
pub fn orbit<E, T, F>(gens: &[E], start: T, act: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&E, &T) -> T,
{
    let mut seen = FxHashSet::default();
    seen.insert(start.clone());
    let mut out = vec![start];
    let mut k = 0;
    while k < out.len() {
        for s in gens {
            let y = act(s, &out[k]);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        k += 1;
    }
    out
}

/// Orbits partitioning `points` (all assumed to lie in invariant orbits).
pub fn orbits<E, T, F>(gens: &[E], points: &[T], act: F) -> Vec<Vec<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&E, &T) -> T,
{
    let mut seen = FxHashSet::default();
    let mut out = Vec::new();
    for p in points {
        if seen.contains(p) {
            continue;
        }
        let o = orbit(gens, p.clone(), &act);
        seen.extend(o.iter().cloned());
        out.push(o);
    }
    out
}

/// Conjugacy classes of the listed elements of `g` (the list must be a union of classes).
pub fn conjugacy_classes<G: FiniteGroup + ?Sized>(g: &G, gens: &[usize], elements: &[usize]) -> Vec<Vec<usize>> {
    orbits(gens, elements, |&s, &x| g.conj(s, x))
}

/// A Sylow p-subgroup of `h`, grown from a p-element by climbing normalizers.
pub fn sylow_subgroup<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, p: usize) -> Subgroup {
    let target = p_part(h.order(), p);
    let mut current = Subgroup::trivial(g);
    while current.order() < target {
        let n = h.normalizer(g, &current);
        // an element of N whose image in N/current has p-power order > 1
        let step = n.members().iter().copied().find_map(|y| {
            if current.contains(y) {
                return None;
            }
            let mut e = 1;
            let mut z = y;
            while !current.contains(z) {
                z = g.mul(z, y);
                e += 1;
            }
            is_p_power(e, p).then(|| g.pow(y, (e / p) as u64))
        });
        let y = step.expect("a p-group below the Sylow order has a larger p-overgroup in its normalizer");
        let mut gens = current.gens().to_vec();
        gens.push(y);
        current = Subgroup::generate(g, &gens);
    }
    current
}

/// Largest normal p-subgroup of `h`: the core of a Sylow p-subgroup.
pub fn o_p<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, p: usize) -> Subgroup {
    let sylow = sylow_subgroup(g, h, p);
    let mut core = sylow.members().to_vec();
    for &x in h.members() {
        core.retain(|&m| sylow.contains(g.conj(x, m)));
        if core.len() == 1 {
            break;
        }
    }
    Subgroup::from_members(g, core)
}

/// O^{p'}(h) for a group generated by its p-elements; in general the subgroup
/// generated by all elements of p-power order.
pub fn p_elements_closure<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, p: usize) -> Subgroup {
    let els: Vec<usize> = h.members().iter().copied().filter(|&x| x != g.identity() && is_p_power(g.element_order(x), p)).collect();
    let mut gens = Vec::new();
    let mut current = Subgroup::trivial(g);
    for x in els {
        if !current.contains(x) {
            gens.push(x);
            current = Subgroup::generate(g, &gens);
        }
    }
    current
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut q = 1;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        q *= p;
    }
    q
}

pub fn is_p_power(n: usize, p: usize) -> bool {
    p_part(n, p) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Group<Perm> {
        let t = Perm::from_cycles(n, &[&[0, 1]]);
        let c = Perm::from_images(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>());
        Group::closure(&[t, c]).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(sym(4).len(), 24);
        assert_eq!(sym(5).len(), 120);
    }

    #[test]
    fn closure_of_identity() {
        let g = Group::closure(&[Perm::identity(3)]).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn closure_cap() {
        let t = Perm::from_cycles(6, &[&[0, 1]]);
        let c = Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]);
        assert_eq!(Group::closure_with(Perm::identity(6), &[t, c], 100).unwrap_err(), Error::ClosureCap { cap: 100 });
    }

    #[test]
    fn s4_structure() {
        let g = sym(4);
        let all = g.whole();
        assert_eq!(all.center(&g).order(), 1);
        let d = all.derived(&g);
        assert_eq!(d.order(), 12);
        assert_eq!(d.derived(&g).order(), 4);
        let classes = conjugacy_classes(&g, all.gens(), all.members());
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(all.exponent(&g), 12);
    }

    #[test]
    fn primitivity() {
        let g = sym(4);
        let all = g.whole();
        // point stabilizer: primitive
        let stab: Vec<usize> = (0..g.len()).filter(|&k| g.element(k).apply(3) == 3).collect();
        let h = Subgroup::from_members(&g, stab);
        assert!(all.is_primitive_on_cosets(&g, &h).unwrap());
        // C4 < D8 < S4, so its cosets fall into blocks
        let c4 = g.subgroup(&[Perm::from_cycles(4, &[&[0, 1, 2, 3]])]);
        assert!(!all.is_primitive_on_cosets(&g, &c4).unwrap());
        assert_eq!(all.is_primitive_on_cosets(&g, &all), Err(Error::IndexOne));
    }

    #[test]
    fn quotient_by_klein_four() {
        let g = sym(4);
        let all = g.whole();
        let v4 = all.derived(&g).derived(&g);
        let q = all.quotient(&g, &v4);
        assert_eq!(q.order(), 6);
        let s = Subgroup::whole(&q);
        assert!(!s.is_abelian(&q));
    }
}
