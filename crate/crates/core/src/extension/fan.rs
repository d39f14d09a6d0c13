use serde::Serialize;

use super::CommutatorForm;
use crate::fflinalg::{enumerate_subspaces, Caps, Subspace};
use crate::Result;

/// The liftable subgroups of `G^a`: noncyclic ones only (the fan), or all of
/// them including `0` and the lines (the complete fan).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fan {
    pub complete: bool,
    pub sigmas: Vec<Subspace>,
}

impl Fan {
    pub fn len(&self) -> usize {
        self.sigmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigmas.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subspace> {
        self.sigmas.iter()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.sigmas.binary_search(s).is_ok()
    }

    /// Number of members of each dimension `0..=n`.
    pub fn size_profile(&self, n: usize) -> Vec<usize> {
        let mut profile = vec![0; n + 1];
        for s in &self.sigmas {
            profile[s.dim()] += 1;
        }
        profile
    }

    /// Members that are noncyclic.
    pub fn noncyclic(&self) -> impl Iterator<Item = &Subspace> {
        self.sigmas.iter().filter(|s| !s.is_cyclic())
    }
}

/// Enumerates `Sigma` (noncyclic liftable subgroups) or, with `complete`,
/// every liftable subgroup. Output is in enumeration (lex) order.
pub fn fan(form: &CommutatorForm, complete: bool, caps: &Caps) -> Result<Fan> {
    let mut sigmas = Vec::new();
    for s in enumerate_subspaces(form.field(), form.n(), None, caps)? {
        if !complete && s.is_cyclic() {
            continue;
        }
        if form.is_liftable(&s)? {
            sigmas.push(s);
        }
    }
    Ok(Fan { complete, sigmas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflinalg::Modulus;

    fn m3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    #[test]
    fn zero_form_plane() {
        let f = CommutatorForm::zero(m3(), 2);
        let sigma = fan(&f, false, &Caps::default()).unwrap();
        assert_eq!(sigma.len(), 1);
        assert!(sigma.sigmas[0].is_full());
        let complete = fan(&f, true, &Caps::default()).unwrap();
        assert_eq!(complete.len(), 6);
    }

    #[test]
    fn heisenberg_has_empty_fan() {
        let f = CommutatorForm::heisenberg(m3());
        assert!(fan(&f, false, &Caps::default()).unwrap().is_empty());
        // 0 and the four lines
        assert_eq!(fan(&f, true, &Caps::default()).unwrap().len(), 5);
    }

    #[test]
    fn single_relation_in_rank_three() {
        let f = CommutatorForm::from_rows(m3(), 3, &[[1, 0, 0]]).unwrap();
        let sigma = fan(&f, false, &Caps::default()).unwrap();
        assert_eq!(sigma.len(), 4);
        let fq = m3().field();
        assert!(sigma.contains(&Subspace::span(fq, 3, [[1, 0, 0], [0, 0, 1]])));
        assert!(sigma.contains(&Subspace::span(fq, 3, [[0, 1, 0], [0, 0, 1]])));
        assert!(!sigma.contains(&Subspace::span(fq, 3, [[1, 0, 0], [0, 1, 0]])));
        assert!(sigma.iter().all(|s| s.dim() == 2));
    }
}
