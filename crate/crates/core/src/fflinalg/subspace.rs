use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{MatrixF, PrimeField};

/// A linear subspace of `F_p^n`, stored by its reduced row-echelon basis.
///
/// The echelon basis is canonical, so two values are equal as sets exactly
/// when they are equal as data. The derived order compares dimension first and
/// then the flattened basis lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    dim: usize,
    data: Vec<u32>,
}

impl Subspace {
    /// Span of arbitrary vectors of length `ambient`.
    pub fn span<I>(field: PrimeField, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator,
        I::Item: AsRef<[u32]>,
    {
        let mut data = Vec::new();
        let mut rows = 0;
        for v in vectors {
            let v = v.as_ref();
            assert_eq!(v.len(), ambient, "vector length must equal the ambient dimension");
            data.extend(v.iter().map(|&x| x % field.p()));
            rows += 1;
        }
        let m = MatrixF::new(field, rows, ambient, data).expect("entries reduced");
        Subspace::from_rref(&m.rref())
    }

    pub fn row_space(m: &MatrixF) -> Subspace {
        Subspace::from_rref(&m.rref())
    }

    fn from_rref(r: &MatrixF) -> Subspace {
        let mut data = Vec::new();
        let mut dim = 0;
        for row in r.row_iter() {
            if row.iter().any(|&x| x != 0) {
                data.extend_from_slice(row);
                dim += 1;
            }
        }
        Subspace {
            field: r.field(),
            ambient: r.cols(),
            dim,
            data,
        }
    }

    /// Wraps rows already known to be in reduced echelon form.
    pub(crate) fn from_canonical_rows(field: PrimeField, ambient: usize, dim: usize, data: Vec<u32>) -> Subspace {
        debug_assert_eq!(data.len(), dim * ambient);
        Subspace {
            field,
            ambient,
            dim,
            data,
        }
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            dim: 0,
            data: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Subspace {
        Subspace::row_space(&MatrixF::identity(field, ambient))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Dimension at most one.
    pub fn is_cyclic(&self) -> bool {
        self.dim <= 1
    }

    pub fn is_full(&self) -> bool {
        self.dim == self.ambient
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.ambient..(i + 1) * self.ambient]
    }

    pub fn basis(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.dim).map(move |i| self.row(i))
    }

    pub fn basis_vecs(&self) -> Vec<Vec<u32>> {
        self.basis().map(<[u32]>::to_vec).collect()
    }

    /// The canonical basis as a `dim x ambient` matrix.
    pub fn basis_matrix(&self) -> MatrixF {
        MatrixF::new(self.field, self.dim, self.ambient, self.data.clone()).expect("canonical rows")
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis()
            .map(|row| row.iter().position(|&x| x != 0).expect("nonzero basis row"))
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let coords: Vec<u32> = self.pivots().iter().map(|&pc| v[pc]).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis()) {
            if *c == 0 {
                continue;
            }
            for (r, &b) in residual.iter_mut().zip(row) {
                *r = f.sub(*r, f.mul(*c, b));
            }
        }
        residual.iter().all(|&x| x == 0).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.check_compatible(other);
        other.basis().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        Subspace::span(self.field, self.ambient, self.basis().chain(other.basis()))
    }

    /// Intersection, computed as the annihilator of the sum of annihilators.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// `{f in dual : f(a) = 0 for all a in self}`, with the dual identified
    /// with `F_p^n` through the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::full(self.field, self.ambient);
        }
        self.basis_matrix().kernel()
    }

    /// Image under a linear map given as a `target x ambient` matrix.
    pub fn image(&self, map: &MatrixF) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "map source dimension must match");
        Subspace::span(self.field, map.rows(), self.basis().map(|v| map.apply(v)))
    }

    /// Standard basis vectors at the non-pivot columns; together with the
    /// canonical basis they form a basis of the ambient space.
    pub fn complement_basis(&self) -> Vec<Vec<u32>> {
        let pivots = self.pivots();
        (0..self.ambient)
            .filter(|c| !pivots.contains(c))
            .map(|c| {
                let mut e = vec![0; self.ambient];
                e[c] = 1;
                e
            })
            .collect()
    }

    /// Every vector of the subspace, as coefficient combinations of the basis
    /// in odometer order. Only meant for small subspaces.
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let p = f.p();
        let total = (p as usize).pow(self.dim as u32);
        let mut out = Vec::with_capacity(total);
        let mut coeffs = vec![0u32; self.dim];
        for _ in 0..total {
            let mut v = vec![0u32; self.ambient];
            for (c, row) in coeffs.iter().zip(self.basis()) {
                for (x, &b) in v.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(*c, b));
                }
            }
            out.push(v);
            for c in coeffs.iter_mut() {
                *c += 1;
                if *c < p {
                    break;
                }
                *c = 0;
            }
        }
        out
    }

    fn check_compatible(&self, other: &Subspace) {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        assert_eq!(self.field, other.field, "fields differ");
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace<F_{}^{}>{:?}",
            self.field.p(),
            self.ambient,
            self.basis_vecs()
        )
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 0 {
            return write!(f, "0");
        }
        let rows: Vec<String> = self
            .basis()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(u32::to_string).collect();
                format!("({})", cells.join(","))
            })
            .collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient_dim", &self.ambient)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("basis", &self.basis_vecs())?;
        st.end()
    }
}
