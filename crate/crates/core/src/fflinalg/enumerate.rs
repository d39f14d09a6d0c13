use super::{PrimeField, Subspace};
use crate::{Error, Result};

/// Size limits for exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest ambient dimension accepted by enumeration entry points.
    pub max_n: usize,
    /// Largest number of subspaces a single enumeration may produce.
    pub max_count: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_n: 6,
            max_count: 5_000_000,
        }
    }
}

impl Caps {
    /// Same count limit, ambient limit raised to `n`. Used for enumerations
    /// inside derived spaces such as the exterior square.
    pub fn with_ambient(self, n: usize) -> Caps {
        Caps {
            max_n: self.max_n.max(n),
            ..self
        }
    }
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Total number of subspaces of `F_q^n` (optionally of one dimension).
pub fn subspace_count(n: usize, q: u32, dim: Option<usize>) -> u128 {
    match dim {
        Some(k) => gaussian_binomial(n, k, q),
        None => (0..=n).map(|k| gaussian_binomial(n, k, q)).sum(),
    }
}

/// Every subspace of `F_p^n` exactly once: by increasing dimension, and within
/// a dimension in lexicographic order of the canonical basis matrix.
pub fn enumerate_subspaces(field: PrimeField, n: usize, dim: Option<usize>, caps: &Caps) -> Result<SubspaceIter> {
    if n > caps.max_n {
        return Err(Error::CapExceeded(format!(
            "ambient dimension {n} exceeds cap {}",
            caps.max_n
        )));
    }
    let count = subspace_count(n, field.p(), dim);
    if count > caps.max_count {
        return Err(Error::CapExceeded(format!(
            "{count} subspaces of F_{}^{n} exceeds cap {}",
            field.p(),
            caps.max_count
        )));
    }
    let dims: Vec<usize> = match dim {
        Some(k) if k > n => Vec::new(),
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    Ok(SubspaceIter {
        field,
        n,
        dims: dims.into_iter(),
        current: Vec::new().into_iter(),
    })
}

/// Lazily materializes one dimension at a time.
pub struct SubspaceIter {
    field: PrimeField,
    n: usize,
    dims: std::vec::IntoIter<usize>,
    current: std::vec::IntoIter<Subspace>,
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            if let Some(s) = self.current.next() {
                return Some(s);
            }
            let d = self.dims.next()?;
            self.current = subspaces_of_dim(self.field, self.n, d).into_iter();
        }
    }
}

fn subspaces_of_dim(field: PrimeField, n: usize, d: usize) -> Vec<Subspace> {
    let p = field.p();
    let mut out = Vec::new();
    for pivots in combinations(n, d) {
        // free positions: (row, col) with col after the row's pivot and not a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &pc)| {
                let pivots = &pivots;
                (pc + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let mut base = vec![0u32; d * n];
        for (i, &pc) in pivots.iter().enumerate() {
            base[i * n + pc] = 1;
        }
        let mut vals = vec![0u32; free.len()];
        loop {
            let mut data = base.clone();
            for (&(i, c), &v) in free.iter().zip(&vals) {
                data[i * n + c] = v;
            }
            out.push(Subspace::from_canonical_rows(field, n, d, data));
            let mut k = 0;
            while k < vals.len() {
                vals[k] += 1;
                if vals[k] < p {
                    break;
                }
                vals[k] = 0;
                k += 1;
            }
            if k == vals.len() {
                break;
            }
        }
    }
    out.sort();
    out
}

/// `k`-subsets of `0..n` as increasing index lists, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}
