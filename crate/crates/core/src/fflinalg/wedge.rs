use super::{MatrixF, PrimeField, Subspace};

/// Coordinates on `wedge^2(F^n)`: basis `e_i ^ e_j` for `i < j`, ordered
/// lexicographically as `(0,1), (0,2), ..., (n-2,n-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WedgeCoords {
    n: usize,
}

impl WedgeCoords {
    pub fn new(n: usize) -> Self {
        WedgeCoords { n }
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// `n(n-1)/2`.
    pub fn dim(self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    /// Index of `e_i ^ e_j`, `i < j` (zero-based).
    pub fn index(self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    pub fn pair(self, idx: usize) -> (usize, usize) {
        let mut base = 0;
        for i in 0..self.n {
            let len = self.n - i - 1;
            if idx < base + len {
                return (i, i + 1 + idx - base);
            }
            base += len;
        }
        panic!("wedge index {idx} out of range for n = {}", self.n);
    }

    pub fn pairs(self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    /// Coordinates of `u ^ v`: entry `(i,j)` is `u_i v_j - u_j v_i`.
    pub fn wedge(self, field: PrimeField, u: &[u32], v: &[u32]) -> Vec<u32> {
        self.pairs()
            .map(|(i, j)| field.sub(field.mul(u[i], v[j]), field.mul(u[j], v[i])))
            .collect()
    }
}

/// The matrix of `wedge^2(g)` for `g: F^k -> F^n` (an `n x k` matrix); the
/// result is `dim wedge^2(F^n) x dim wedge^2(F^k)`.
pub fn wedge_square(g: &MatrixF) -> MatrixF {
    let field = g.field();
    let src = WedgeCoords::new(g.cols());
    let dst = WedgeCoords::new(g.rows());
    let cols: Vec<Vec<u32>> = (0..g.cols()).map(|c| g.column(c)).collect();
    let mut out = MatrixF::zeros(field, dst.dim(), src.dim());
    for (idx, (k, l)) in src.pairs().enumerate() {
        let w = dst.wedge(field, &cols[k], &cols[l]);
        for (row, v) in w.into_iter().enumerate() {
            out.set(row, idx, v);
        }
    }
    out
}

/// `wedge^2(S)` as a subspace of `wedge^2(F^n)`, spanned by the wedges of
/// pairs of basis vectors of `S`.
pub fn wedge_image(s: &Subspace) -> Subspace {
    let wc = WedgeCoords::new(s.ambient_dim());
    let basis = s.basis_vecs();
    let mut gens = Vec::new();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            gens.push(wc.wedge(s.field(), &basis[a], &basis[b]));
        }
    }
    Subspace::span(s.field(), wc.dim(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn index_is_lex_bijection() {
        for n in 0..7 {
            let wc = WedgeCoords::new(n);
            let pairs: Vec<_> = wc.pairs().collect();
            assert_eq!(pairs.len(), wc.dim());
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                assert_eq!(wc.index(i, j), idx);
                assert_eq!(wc.pair(idx), (i, j));
            }
        }
    }

    #[test]
    fn image_of_coordinate_plane() {
        let s = Subspace::span(f3(), 3, [[1, 0, 0], [0, 1, 0]]);
        let w = wedge_image(&s);
        assert_eq!(w, Subspace::span(f3(), 3, [[1, 0, 0]]));
    }

    #[test]
    fn cyclic_image_is_zero() {
        let s = Subspace::span(f3(), 3, [[1, 2, 1]]);
        assert!(wedge_image(&s).is_zero());
    }

    #[test]
    fn image_expanded_bilinearly() {
        // (e1+e2) ^ e3 = e1^e3 + e2^e3 -> coordinates (0, 1, 1)
        let s = Subspace::span(f3(), 3, [[1, 1, 0], [0, 0, 1]]);
        assert_eq!(wedge_image(&s), Subspace::span(f3(), 3, [[0, 1, 1]]));
    }

    #[test]
    fn wedge_square_of_projection() {
        // drop e3: F^3 -> F^2
        let g = MatrixF::from_rows(f3(), 3, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        let w = wedge_square(&g);
        assert_eq!(w.to_rows(), vec![vec![1, 0, 0]]);
    }
}
