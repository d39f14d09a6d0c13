//! `GL(n, F_l)`-orbits of subspaces of `wedge^2(F^n)`.
//!
//! The group acts on kernels by `K -> wedge^2(g)(K)`. Orbits are explored by
//! breadth-first search over a generating set, so an orbit costs
//! `|orbit| * |generators|` subspace images instead of `|GL(n, F_l)|`.

use std::collections::{HashMap, VecDeque};

use crate::fflinalg::{wedge_square, MatrixF, PrimeField, Subspace};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Elementary transvections and one diagonal scaling: all of `GL(n)`.
    Full,
    /// Adjacent transpositions and one diagonal scaling: the monomial subgroup.
    Monomial,
}

pub fn gl_generators(field: PrimeField, n: usize) -> Vec<MatrixF> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut g = MatrixF::identity(field, n);
                g.set(i, j, 1);
                gens.push(g);
            }
        }
    }
    if n > 0 && field.p() > 2 {
        let mut d = MatrixF::identity(field, n);
        d.set(0, 0, field.primitive_root());
        gens.push(d);
    }
    gens
}

pub fn monomial_generators(field: PrimeField, n: usize) -> Vec<MatrixF> {
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut g = MatrixF::zeros(field, n, n);
        for k in 0..n {
            let t = if k == i {
                i + 1
            } else if k == i + 1 {
                i
            } else {
                k
            };
            g.set(t, k, 1);
        }
        gens.push(g);
    }
    if n > 0 && field.p() > 2 {
        let mut d = MatrixF::identity(field, n);
        d.set(0, 0, field.primitive_root());
        gens.push(d);
    }
    gens
}

/// Breadth-first orbit search under a fixed generating set.
pub struct OrbitExplorer {
    field: PrimeField,
    n: usize,
    gens: Vec<MatrixF>,
    wedge_gens: Vec<MatrixF>,
    max_orbit: usize,
}

/// One orbit found by [`OrbitExplorer::partition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    /// Lexicographically least member.
    pub canonical: Subspace,
    pub size: usize,
}

impl OrbitExplorer {
    pub fn new(field: PrimeField, n: usize, kind: GeneratorKind, max_orbit: usize) -> Self {
        let gens = match kind {
            GeneratorKind::Full => gl_generators(field, n),
            GeneratorKind::Monomial => monomial_generators(field, n),
        };
        let wedge_gens = gens.iter().map(wedge_square).collect();
        OrbitExplorer {
            field,
            n,
            gens,
            wedge_gens,
            max_orbit,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[MatrixF] {
        &self.gens
    }

    /// `wedge^2(g)(kernel)` for an arbitrary `g` in `GL(n)`.
    pub fn act(g: &MatrixF, kernel: &Subspace) -> Subspace {
        kernel.image(&wedge_square(g))
    }

    fn neighbours<'a>(&'a self, k: &'a Subspace) -> impl Iterator<Item = (usize, Subspace)> + 'a {
        self.wedge_gens.iter().enumerate().map(move |(gi, w)| (gi, k.image(w)))
    }

    fn too_big(&self) -> Error {
        Error::CapExceeded(format!("orbit larger than {} kernels", self.max_orbit))
    }

    /// All members of the orbit of `start`, in discovery order.
    pub fn orbit(&self, start: &Subspace) -> Result<Vec<Subspace>> {
        let mut seen: HashMap<Subspace, ()> = HashMap::new();
        let mut order = vec![start.clone()];
        seen.insert(start.clone(), ());
        let mut head = 0;
        while head < order.len() {
            let cur = order[head].clone();
            head += 1;
            for (_, next) in self.neighbours(&cur) {
                if !seen.contains_key(&next) {
                    if order.len() >= self.max_orbit {
                        return Err(self.too_big());
                    }
                    seen.insert(next.clone(), ());
                    order.push(next);
                }
            }
        }
        Ok(order)
    }

    /// Lexicographically least member of the orbit.
    pub fn canonical(&self, start: &Subspace) -> Result<Subspace> {
        Ok(self.orbit(start)?.into_iter().min().expect("orbit contains its start"))
    }

    /// A group element `g` with `wedge^2(g)(from) = to`, if one exists.
    pub fn find(&self, from: &Subspace, to: &Subspace) -> Result<Option<MatrixF>> {
        if from.dim() != to.dim() {
            return Ok(None);
        }
        // parent pointers: node -> (parent index, generator index)
        let mut index: HashMap<Subspace, usize> = HashMap::new();
        let mut nodes: Vec<(Subspace, Option<(usize, usize)>)> = vec![(from.clone(), None)];
        index.insert(from.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        let mut hit = (from == to).then_some(0);
        while hit.is_none() {
            let Some(cur) = queue.pop_front() else { break };
            let node = nodes[cur].0.clone();
            for (gi, next) in self.neighbours(&node) {
                if index.contains_key(&next) {
                    continue;
                }
                if nodes.len() >= self.max_orbit {
                    return Err(self.too_big());
                }
                let id = nodes.len();
                let found = &next == to;
                index.insert(next.clone(), id);
                nodes.push((next, Some((cur, gi))));
                queue.push_back(id);
                if found {
                    hit = Some(id);
                    break;
                }
            }
        }
        let Some(mut at) = hit else { return Ok(None) };
        let mut g = MatrixF::identity(self.field, self.n);
        while let Some((parent, gi)) = nodes[at].1 {
            // the path is g_k ... g_1 applied to `from`; walk back from g_k
            g = g.mul(&self.gens[gi])?;
            at = parent;
        }
        Ok(Some(g))
    }

    /// Splits a set of kernels closed under the group into orbits, sorted by
    /// canonical representative.
    pub fn partition<I>(&self, kernels: I) -> Result<Vec<OrbitClass>>
    where
        I: IntoIterator<Item = Subspace>,
    {
        let mut assigned: HashMap<Subspace, ()> = HashMap::new();
        let mut classes = Vec::new();
        for k in kernels {
            if assigned.contains_key(&k) {
                continue;
            }
            let orbit = self.orbit(&k)?;
            let size = orbit.len();
            let canonical = orbit.iter().min().cloned().expect("nonempty orbit");
            for m in orbit {
                assigned.insert(m, ());
            }
            classes.push(OrbitClass { canonical, size });
        }
        classes.sort_by(|a, b| a.canonical.cmp(&b.canonical));
        Ok(classes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflinalg::{enumerate_subspaces, Caps};

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn gl_order(n: u32, q: u64) -> u64 {
        (0..n).map(|i| q.pow(n) - q.pow(i)).product()
    }

    fn closure_size(gens: &[MatrixF], n: usize) -> usize {
        let f = gens[0].field();
        let mut seen = std::collections::HashSet::new();
        let id = MatrixF::identity(f, n);
        let mut stack = vec![id.clone()];
        seen.insert(id);
        while let Some(g) = stack.pop() {
            for h in gens {
                let x = h.mul(&g).unwrap();
                if seen.insert(x.clone()) {
                    stack.push(x);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn generators_generate_gl() {
        assert_eq!(closure_size(&gl_generators(f3(), 2), 2) as u64, gl_order(2, 3));
        assert_eq!(closure_size(&gl_generators(f3(), 3), 3) as u64, gl_order(3, 3));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(closure_size(&gl_generators(f5, 2), 2) as u64, gl_order(2, 5));
    }

    #[test]
    fn monomial_generators_generate_monomial_group() {
        // n! * (p-1)^n
        assert_eq!(closure_size(&monomial_generators(f3(), 3), 3), 6 * 8);
    }

    #[test]
    fn planes_of_rank_three_wedge_form_one_orbit() {
        // codimension-one kernels in wedge^2(F_3^3) correspond to nonzero
        // alternating forms of rank 2: a single orbit of size 13
        let ex = OrbitExplorer::new(f3(), 3, GeneratorKind::Full, 1_000_000);
        let kernels = enumerate_subspaces(f3(), 3, Some(2), &Caps::default()).unwrap();
        let classes = ex.partition(kernels).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 13);
    }

    #[test]
    fn witness_maps_kernel() {
        let ex = OrbitExplorer::new(f3(), 3, GeneratorKind::Full, 1_000_000);
        let a = Subspace::span(f3(), 3, [[0, 1, 0], [0, 0, 1]]);
        let b = Subspace::span(f3(), 3, [[1, 0, 0], [0, 0, 1]]);
        let g = ex.find(&a, &b).unwrap().unwrap();
        assert_eq!(OrbitExplorer::act(&g, &a), b);
        assert!(g.inverse().is_some());
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let ex = OrbitExplorer::new(f3(), 3, GeneratorKind::Full, 5);
        let a = Subspace::span(f3(), 3, [[0, 1, 0], [0, 0, 1]]);
        assert!(matches!(ex.orbit(&a), Err(Error::CapExceeded(_))));
    }
}
