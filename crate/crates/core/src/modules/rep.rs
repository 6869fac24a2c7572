use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::linalg::{kernel, unit, Field, Matrix, Subspace, Tracker};

/// An arrow acting on modules: it maps the component at `from` in degree `d`
/// to the component at `to` in degree `d + deg`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionArrow {
    pub label: String,
    pub from: usize,
    pub to: usize,
    pub deg: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionQuiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<ActionArrow>,
}

impl ActionQuiver {
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = (usize, &ActionArrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.from == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = (usize, &ActionArrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.to == v)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Slot {
    pub vertex: usize,
    pub degree: i32,
}

impl Slot {
    pub fn new(vertex: usize, degree: i32) -> Self {
        Slot { vertex, degree }
    }

    pub fn shifted(self, by: i32) -> Self {
        Slot {
            vertex: self.vertex,
            degree: self.degree + by,
        }
    }
}

pub type SlotSpaces<E> = BTreeMap<Slot, Subspace<E>>;

/// A finite-dimensional graded representation.
#[derive(Clone, Debug)]
pub struct Module<F: Field> {
    field: F,
    quiver: Arc<ActionQuiver>,
    dims: BTreeMap<Slot, usize>,
    maps: BTreeMap<(usize, Slot), Matrix<F::Elem>>,
}

/// A degree-preserving family of linear maps `X_{v,d} -> Y_{v,d+shift}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism<E> {
    pub shift: i32,
    pub blocks: BTreeMap<Slot, Matrix<E>>,
}

impl<F: Field> Module<F> {
    pub fn new(field: F, quiver: Arc<ActionQuiver>) -> Self {
        Module {
            field,
            quiver,
            dims: BTreeMap::new(),
            maps: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn quiver(&self) -> &Arc<ActionQuiver> {
        &self.quiver
    }

    pub fn same_quiver(&self, other: &Module<F>) -> bool {
        Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver
    }

    pub fn set_dim(&mut self, slot: Slot, dim: usize) {
        if dim == 0 {
            self.dims.remove(&slot);
        } else {
            self.dims.insert(slot, dim);
        }
    }

    /// Sets the action of `arrow` on `slot`; zero matrices are not stored.
    pub fn set_map(&mut self, arrow: usize, slot: Slot, m: Matrix<F::Elem>) {
        let target = self.target(arrow, slot);
        assert_eq!(m.cols(), self.dim(slot), "action matrix has wrong source size");
        assert_eq!(m.rows(), self.dim(target), "action matrix has wrong target size");
        if m.rows() == 0 || m.cols() == 0 || m.is_zero(&self.field) {
            self.maps.remove(&(arrow, slot));
        } else {
            self.maps.insert((arrow, slot), m);
        }
    }

    pub fn dim(&self, slot: Slot) -> usize {
        self.dims.get(&slot).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn slots(&self) -> impl Iterator<Item = (Slot, usize)> + '_ {
        self.dims.iter().map(|(s, d)| (*s, *d))
    }

    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let lo = self.dims.keys().map(|s| s.degree).min()?;
        let hi = self.dims.keys().map(|s| s.degree).max()?;
        Some((lo, hi))
    }

    pub fn dim_in_degree(&self, d: i32) -> usize {
        self.slots().filter(|(s, _)| s.degree == d).map(|(_, n)| n).sum()
    }

    pub fn target(&self, arrow: usize, slot: Slot) -> Slot {
        let a = &self.quiver.arrows[arrow];
        assert_eq!(a.from, slot.vertex, "arrow does not start at this vertex");
        Slot::new(a.to, slot.degree + a.deg)
    }

    /// The matrix of `arrow` on `slot`, or `None` when it is zero.
    pub fn map(&self, arrow: usize, slot: Slot) -> Option<&Matrix<F::Elem>> {
        self.maps.get(&(arrow, slot))
    }

    /// The matrix of `arrow` on `slot`, zeros included.
    pub fn map_dense(&self, arrow: usize, slot: Slot) -> Matrix<F::Elem> {
        match self.map(arrow, slot) {
            Some(m) => m.clone(),
            None => Matrix::zeros(&self.field, self.dim(self.target(arrow, slot)), self.dim(slot)),
        }
    }

    pub fn act(&self, arrow: usize, slot: Slot, v: &[F::Elem]) -> Vec<F::Elem> {
        match self.map(arrow, slot) {
            Some(m) => m.apply(&self.field, v),
            None => vec![self.field.zero(); self.dim(self.target(arrow, slot))],
        }
    }

    /// `X(j)` with `X(j)_i = X_{i+j}`.
    pub fn shift(&self, j: i32) -> Module<F> {
        Module {
            field: self.field.clone(),
            quiver: self.quiver.clone(),
            dims: self.dims.iter().map(|(s, d)| (s.shifted(-j), *d)).collect(),
            maps: self
                .maps
                .iter()
                .map(|((a, s), m)| ((*a, s.shifted(-j)), m.clone()))
                .collect(),
        }
    }

    /// Whether every arrow matrix has the right shape and the family of
    /// subspaces is stable under the action.
    pub fn is_closed(&self, spaces: &SlotSpaces<F::Elem>) -> bool {
        let f = &self.field;
        for (slot, space) in spaces {
            for (a, _) in self.quiver.arrows_from(slot.vertex) {
                let t = self.target(a, *slot);
                for v in space.basis() {
                    let img = self.act(a, *slot, v);
                    if img.iter().all(|x| f.is_zero(x)) {
                        continue;
                    }
                    match spaces.get(&t) {
                        Some(ts) if ts.contains(f, &img) => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    /// Submodule with the canonical basis of each space; returns the inclusion.
    pub fn submodule(&self, spaces: &SlotSpaces<F::Elem>) -> (Module<F>, Morphism<F::Elem>) {
        let f = &self.field;
        let mut sub = Module::new(f.clone(), self.quiver.clone());
        let mut blocks = BTreeMap::new();
        for (slot, space) in spaces {
            if space.is_zero() {
                continue;
            }
            sub.set_dim(*slot, space.dim());
            blocks.insert(
                *slot,
                Matrix::from_columns(self.dim(*slot), space.basis(), f.zero()),
            );
        }
        for (slot, space) in spaces {
            if space.is_zero() {
                continue;
            }
            for (a, _) in self.quiver.arrows_from(slot.vertex) {
                let t = self.target(a, *slot);
                if sub.dim(t) == 0 {
                    continue;
                }
                let ts = &spaces[&t];
                let columns: Vec<Vec<F::Elem>> = space
                    .basis()
                    .iter()
                    .map(|v| {
                        ts.coords(f, &self.act(a, *slot, v))
                            .expect("subspaces are closed under the action")
                    })
                    .collect();
                sub.set_map(a, *slot, Matrix::from_columns(ts.dim(), &columns, f.zero()));
            }
        }
        (sub, Morphism { shift: 0, blocks })
    }

    /// Quotient by a submodule; basis of each component is the free columns
    /// of the subspace. Returns the projection.
    pub fn quotient(&self, spaces: &SlotSpaces<F::Elem>) -> (Module<F>, Morphism<F::Elem>) {
        let f = &self.field;
        let mut quo = Module::new(f.clone(), self.quiver.clone());
        let mut free: BTreeMap<Slot, Vec<usize>> = BTreeMap::new();
        let zero_spaces: BTreeMap<Slot, Subspace<F::Elem>> = self
            .dims
            .iter()
            .map(|(s, d)| (*s, spaces.get(s).cloned().unwrap_or_else(|| Subspace::zero(*d))))
            .collect();
        for (slot, space) in &zero_spaces {
            let cols = space.free_columns();
            quo.set_dim(*slot, cols.len());
            free.insert(*slot, cols);
        }
        let project = |slot: Slot, v: &[F::Elem]| -> Vec<F::Elem> {
            match zero_spaces.get(&slot) {
                None => Vec::new(),
                Some(space) => {
                    let r = space.reduce(f, v);
                    free[&slot].iter().map(|&c| r[c].clone()).collect()
                }
            }
        };
        let mut blocks = BTreeMap::new();
        for (slot, dim) in &self.dims {
            let n = quo.dim(*slot);
            if n == 0 {
                continue;
            }
            let columns: Vec<Vec<F::Elem>> = (0..*dim).map(|i| project(*slot, &unit(f, *dim, i))).collect();
            blocks.insert(*slot, Matrix::from_columns(n, &columns, f.zero()));
            for (a, _) in self.quiver.arrows_from(slot.vertex) {
                let t = self.target(a, *slot);
                if quo.dim(t) == 0 {
                    continue;
                }
                let columns: Vec<Vec<F::Elem>> = free[slot]
                    .iter()
                    .map(|&c| project(t, &self.act(a, *slot, &unit(f, *dim, c))))
                    .collect();
                quo.set_map(a, *slot, Matrix::from_columns(quo.dim(t), &columns, f.zero()));
            }
        }
        (quo, Morphism { shift: 0, blocks })
    }

    pub fn full_spaces(&self) -> SlotSpaces<F::Elem> {
        self.dims
            .iter()
            .map(|(s, d)| (*s, Subspace::full(&self.field, *d)))
            .collect()
    }

    /// Sum of the images of all arrows applied to `spaces`.
    pub fn arrow_images(&self, spaces: &SlotSpaces<F::Elem>) -> SlotSpaces<F::Elem> {
        let f = &self.field;
        let mut vectors: BTreeMap<Slot, Vec<Vec<F::Elem>>> = BTreeMap::new();
        for (slot, space) in spaces {
            for (a, _) in self.quiver.arrows_from(slot.vertex) {
                let t = self.target(a, *slot);
                if self.dim(t) == 0 || self.map(a, *slot).is_none() {
                    continue;
                }
                for v in space.basis() {
                    vectors.entry(t).or_default().push(self.act(a, *slot, v));
                }
            }
        }
        self.dims
            .iter()
            .map(|(s, d)| {
                let vs = vectors.remove(s).unwrap_or_default();
                (*s, Subspace::span(f, *d, vs))
            })
            .collect()
    }

    pub fn radical(&self) -> SlotSpaces<F::Elem> {
        self.arrow_images(&self.full_spaces())
    }

    /// Lifts of a basis of the top, as standard vectors outside the radical.
    pub fn top_lifts(&self) -> Vec<(Slot, Vec<F::Elem>)> {
        let rad = self.radical();
        let mut out = Vec::new();
        for (slot, d) in &self.dims {
            for c in rad[slot].free_columns() {
                out.push((*slot, unit(&self.field, *d, c)));
            }
        }
        out
    }

    pub fn top_dims(&self) -> BTreeMap<Slot, usize> {
        let rad = self.radical();
        self.dims
            .iter()
            .map(|(s, d)| (*s, d - rad[s].dim()))
            .filter(|(_, n)| *n > 0)
            .collect()
    }

    /// Radical layers `rad^k / rad^{k+1}` with their slot dimensions.
    pub fn radical_layers(&self) -> Vec<BTreeMap<Slot, usize>> {
        let mut layers = Vec::new();
        let mut cur = self.full_spaces();
        loop {
            let next = self.arrow_images(&cur);
            let layer: BTreeMap<Slot, usize> = cur
                .iter()
                .map(|(s, sp)| (*s, sp.dim() - next[s].dim()))
                .filter(|(_, n)| *n > 0)
                .collect();
            if layer.is_empty() {
                return layers;
            }
            layers.push(layer);
            cur = next;
        }
    }

    /// Submodule generated by the given vectors.
    pub fn generate(&self, seeds: &[(Slot, Vec<F::Elem>)]) -> SlotSpaces<F::Elem> {
        let f = &self.field;
        let mut trackers: BTreeMap<Slot, Tracker<F::Elem>> = self
            .dims
            .iter()
            .map(|(s, d)| (*s, Tracker::new(*d)))
            .collect();
        let mut accepted: BTreeMap<Slot, Vec<Vec<F::Elem>>> = BTreeMap::new();
        let mut queue: VecDeque<(Slot, Vec<F::Elem>)> = seeds.iter().cloned().collect();
        while let Some((slot, v)) = queue.pop_front() {
            let Some(t) = trackers.get_mut(&slot) else { continue };
            if !t.offer(f, &v) {
                continue;
            }
            for (a, _) in self.quiver.arrows_from(slot.vertex) {
                if self.map(a, slot).is_some() {
                    queue.push_back((self.target(a, slot), self.act(a, slot, &v)));
                }
            }
            accepted.entry(slot).or_default().push(v);
        }
        self.dims
            .iter()
            .map(|(s, d)| (*s, Subspace::span(f, *d, accepted.remove(s).unwrap_or_default())))
            .collect()
    }

    /// Direct sum; returns the offset of each summand inside each slot.
    pub fn direct_sum(field: &F, quiver: Arc<ActionQuiver>, parts: &[&Module<F>]) -> (Module<F>, Vec<BTreeMap<Slot, usize>>) {
        let mut sum = Module::new(field.clone(), quiver);
        let mut offsets = vec![BTreeMap::new(); parts.len()];
        let mut totals: BTreeMap<Slot, usize> = BTreeMap::new();
        for (i, p) in parts.iter().enumerate() {
            assert!(p.quiver == sum.quiver || *p.quiver == *sum.quiver, "summands over different quivers");
            for (s, d) in p.slots() {
                let t = totals.entry(s).or_insert(0);
                offsets[i].insert(s, *t);
                *t += d;
            }
        }
        for (s, d) in &totals {
            sum.set_dim(*s, *d);
        }
        let slots: Vec<Slot> = totals.keys().copied().collect();
        for s in slots {
            for (a, _) in sum.quiver.clone().arrows_from(s.vertex) {
                let t = sum.target(a, s);
                if sum.dim(t) == 0 {
                    continue;
                }
                let mut m = Matrix::zeros(field, sum.dim(t), sum.dim(s));
                let mut any = false;
                for (i, p) in parts.iter().enumerate() {
                    if let Some(block) = p.map(a, s) {
                        any = true;
                        let (ro, co) = (offsets[i][&t], offsets[i][&s]);
                        for r in 0..block.rows() {
                            for c in 0..block.cols() {
                                m.set(ro + r, co + c, block.get(r, c).clone());
                            }
                        }
                    }
                }
                if any {
                    sum.set_map(a, s, m);
                }
            }
        }
        (sum, offsets)
    }

    /// Keeps only the slots accepted by `keep_slot` and the arrows listed in
    /// `arrows`, re-indexed into `quiver`.
    pub fn restrict(&self, quiver: Arc<ActionQuiver>, arrows: &[usize], keep_slot: impl Fn(Slot) -> bool) -> Module<F> {
        let mut out = Module::new(self.field.clone(), quiver);
        for (s, d) in self.slots() {
            if keep_slot(s) {
                out.set_dim(s, d);
            }
        }
        for (new, &old) in arrows.iter().enumerate() {
            for ((a, s), m) in &self.maps {
                if *a == old && keep_slot(*s) && keep_slot(self.target(*a, *s)) {
                    out.set_map(new, *s, m.clone());
                }
            }
        }
        out
    }

    /// Per-vertex, per-degree dimension table.
    pub fn dim_table(&self) -> BTreeMap<(usize, i32), usize> {
        self.dims.iter().map(|(s, d)| ((s.vertex, s.degree), *d)).collect()
    }

    /// Graded dimension vector of vertex `v`: degree -> dim.
    pub fn vertex_dims(&self, v: usize) -> BTreeMap<i32, usize> {
        self.dims
            .iter()
            .filter(|(s, _)| s.vertex == v)
            .map(|(s, d)| (s.degree, *d))
            .collect()
    }
}

impl<E: Clone + PartialEq> Morphism<E> {
    pub fn zero(shift: i32) -> Self {
        Morphism {
            shift,
            blocks: BTreeMap::new(),
        }
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, slot: Slot, v: &[E], target_dim: usize) -> Vec<E> {
        match self.blocks.get(&slot) {
            Some(m) => m.apply(f, v),
            None => vec![f.zero(); target_dim],
        }
    }

    /// The map as a dense block, zeros included.
    pub fn block<F: Field<Elem = E>>(&self, source: &Module<F>, target: &Module<F>, slot: Slot) -> Matrix<E> {
        match self.blocks.get(&slot) {
            Some(m) => m.clone(),
            None => Matrix::zeros(source.field(), target.dim(slot.shifted(self.shift)), source.dim(slot)),
        }
    }

    pub fn kernel<F: Field<Elem = E>>(&self, source: &Module<F>, target: &Module<F>) -> SlotSpaces<E> {
        source
            .slots()
            .map(|(s, d)| {
                let k = match self.blocks.get(&s) {
                    Some(m) if target.dim(s.shifted(self.shift)) > 0 => kernel(source.field(), m),
                    _ => Subspace::full(source.field(), d),
                };
                (s, k)
            })
            .collect()
    }

    pub fn image<F: Field<Elem = E>>(&self, source: &Module<F>, target: &Module<F>) -> SlotSpaces<E> {
        let f = source.field();
        target
            .slots()
            .map(|(t, d)| {
                let s = t.shifted(-self.shift);
                let vs = match self.blocks.get(&s) {
                    Some(m) if source.dim(s) > 0 => m.transpose().to_rows(),
                    _ => Vec::new(),
                };
                (t, Subspace::span(f, d, vs))
            })
            .collect()
    }

    /// `other ∘ self`.
    pub fn then<F: Field<Elem = E>>(&self, f: &F, other: &Morphism<E>) -> Morphism<E> {
        let mut blocks = BTreeMap::new();
        for (s, m) in &self.blocks {
            if let Some(n) = other.blocks.get(&s.shifted(self.shift)) {
                let p = n.mul(f, m);
                if !p.is_zero(f) {
                    blocks.insert(*s, p);
                }
            }
        }
        Morphism {
            shift: self.shift + other.shift,
            blocks,
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.blocks.values().all(|m| m.is_zero(f))
    }

    /// Whether the map commutes with every arrow action.
    pub fn commutes<F: Field<Elem = E>>(&self, source: &Module<F>, target: &Module<F>) -> bool {
        let f = source.field();
        for (s, _) in source.slots() {
            for (a, _) in source.quiver().arrows_from(s.vertex) {
                let t = source.target(a, s);
                // a ∘ φ  versus  φ ∘ a
                let left = target.map_dense(a, s.shifted(self.shift)).mul(f, &self.block(source, target, s));
                let right = self.block(source, target, t).mul(f, &source.map_dense(a, s));
                if left != right {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    fn a3_quiver() -> Arc<ActionQuiver> {
        // 1 -a-> 2 -b-> 3
        Arc::new(ActionQuiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                ActionArrow { label: "a".into(), from: 0, to: 1, deg: 0 },
                ActionArrow { label: "b".into(), from: 1, to: 2, deg: 0 },
            ],
        })
    }

    fn uniserial() -> Module<Rationals> {
        let f = Rationals;
        let mut m = Module::new(f, a3_quiver());
        for v in 0..3 {
            m.set_dim(Slot::new(v, 0), 1);
        }
        m.set_map(0, Slot::new(0, 0), Matrix::identity(&f, 1));
        m.set_map(1, Slot::new(1, 0), Matrix::identity(&f, 1));
        m
    }

    #[test]
    fn radical_layers_of_uniserial() {
        let m = uniserial();
        let layers = m.radical_layers();
        assert_eq!(layers.len(), 3);
        assert_eq!(layers.iter().map(|l| l.values().sum::<usize>()).sum::<usize>(), m.total_dim());
        assert_eq!(m.top_dims().len(), 1);
    }

    #[test]
    fn quotient_and_submodule() {
        let m = uniserial();
        let rad = m.radical();
        assert!(m.is_closed(&rad));
        let (sub, inc) = m.submodule(&rad);
        assert_eq!(sub.total_dim(), 2);
        assert!(inc.commutes(&sub, &m));
        let (quo, proj) = m.quotient(&rad);
        assert_eq!(quo.total_dim(), 1);
        assert!(proj.commutes(&m, &quo));
        assert!(inc.then(m.field(), &proj).is_zero(m.field()));
    }

    #[test]
    fn shift_moves_degrees_down() {
        let m = uniserial().shift(2);
        assert_eq!(m.degree_range(), Some((-2, -2)));
        assert_eq!(m.shift(-2).degree_range(), Some((0, 0)));
    }

    #[test]
    fn generated_submodule() {
        let m = uniserial();
        let g = m.generate(&[(Slot::new(1, 0), vec![Rationals.one()])]);
        assert_eq!(g.values().map(|s| s.dim()).sum::<usize>(), 2);
    }

    #[test]
    fn direct_sum_dims() {
        let m = uniserial();
        let (s, off) = Module::direct_sum(&Rationals, m.quiver().clone(), &[&m, &m]);
        assert_eq!(s.total_dim(), 6);
        assert_eq!(off[1][&Slot::new(0, 0)], 1);
        assert_eq!(s.radical_layers().len(), 3);
    }
}
