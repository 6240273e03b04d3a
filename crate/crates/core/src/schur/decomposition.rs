//! Decomposition matrices `[W^λ : L^μ]`.

use serde::Serialize;

use super::algebra::SchurContext;
use super::module::{composition_factors, GeneratorShapes};
use super::weyl::{schur_shapes, weyl_module, CellModule};
use super::SchurError;
use crate::combinatorics::{Catalog, MultiComp};
use crate::exact_linear::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    #[serde(serialize_with = "serialize_labels")]
    pub labels: Vec<MultiComp>,
    /// `entries[λ][μ] = [W^λ : L^μ]`
    pub entries: Vec<Vec<usize>>,
}

fn serialize_labels<S: serde::Serializer>(labels: &[MultiComp], ser: S) -> Result<S::Ok, S::Error> {
    let arrays: Vec<Vec<Vec<usize>>> = labels.iter().map(MultiComp::to_arrays).collect();
    arrays.serialize(ser)
}

impl DecompositionMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, l: usize, m: usize) -> usize {
        self.entries[l][m]
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == usize::from(i == j)))
    }

    /// `d_{λλ} = 1` and `d_{λμ} ≠ 0` only if `λ ⊵ μ`.
    pub fn is_unitriangular(&self, cat: &Catalog) -> bool {
        self.entries.iter().enumerate().all(|(l, row)| {
            row.iter()
                .enumerate()
                .all(|(m, &x)| if l == m { x == 1 } else { x == 0 || cat.plus_dominates(l, m) })
        })
    }

    /// `Σ_μ d_{λμ} dim L^μ = dim W^λ` for every `λ`.
    pub fn dimensions_consistent(&self, weyl_dims: &[usize], simple_dims: &[usize]) -> bool {
        self.entries
            .iter()
            .zip(weyl_dims)
            .all(|(row, &w)| row.iter().zip(simple_dims).map(|(d, s)| d * s).sum::<usize>() == w)
    }
}

/// Decomposition matrix from a family of cell modules of one algebra,
/// using the module-splitting engine.
pub fn split_decomposition<F: Field>(
    shapes: &GeneratorShapes,
    cells: &[CellModule<F>],
    labels: Vec<MultiComp>,
) -> Result<DecompositionMatrix, SchurError> {
    let simples: Vec<_> = cells.iter().map(|c| c.simple_quotient(shapes)).collect();
    let mut entries = vec![vec![0; cells.len()]; cells.len()];
    for (l, c) in cells.iter().enumerate() {
        for f in composition_factors(shapes, &c.module, &simples)? {
            entries[l][f] += 1;
        }
    }
    Ok(DecompositionMatrix { labels, entries })
}

/// Decomposition matrix from weight characters alone: `ch W^λ` is known
/// from the tableau counts and `ch L^μ` from the ranks of the Gram blocks;
/// the characters of the `L^μ` are unitriangular, so the multiplicities
/// are forced. `weight_of[μ]` is the weight at which `L^μ` has its
/// highest vector; `cells` must be ordered so that dominant labels come
/// first.
pub fn character_decomposition<F: Field>(
    cells: &[CellModule<F>],
    weight_of: &[usize],
    labels: Vec<MultiComp>,
) -> Result<DecompositionMatrix, SchurError> {
    let simple: Vec<Vec<usize>> = cells.iter().map(CellModule::simple_weight_dims).collect();
    let mut entries = vec![vec![0; cells.len()]; cells.len()];
    for (l, c) in cells.iter().enumerate() {
        let mut rem: Vec<i64> = c.weight_dims().iter().map(|&x| x as i64).collect();
        for (m, ch) in simple.iter().enumerate() {
            let d = rem[weight_of[m]];
            if d < 0 {
                return Err(SchurError::Inconsistent("negative multiplicity".into()));
            }
            for (r, &x) in rem.iter_mut().zip(ch) {
                *r -= d * x as i64;
            }
            entries[l][m] = d as usize;
        }
        if rem.iter().any(|&x| x != 0) {
            return Err(SchurError::Inconsistent("characters do not decompose".into()));
        }
    }
    Ok(DecompositionMatrix { labels, entries })
}

/// All Weyl modules of `S(Λ)` (fast construction).
pub fn weyl_modules<F: Field>(s: &SchurContext<F>) -> Result<Vec<CellModule<F>>, SchurError> {
    (0..s.cat.plus().len()).map(|l| weyl_module(s, l)).collect()
}

/// `[W^λ : L^μ]` over `S(Λ)` by splitting.
pub fn decomposition_matrix<F: Field>(s: &SchurContext<F>) -> Result<DecompositionMatrix, SchurError> {
    let cells = weyl_modules(s)?;
    split_decomposition(&schur_shapes(s), &cells, s.cat.plus().to_vec())
}

/// `[W^λ : L^μ]` over `S(Λ)` from characters.
pub fn decomposition_matrix_by_characters<F: Field>(s: &SchurContext<F>) -> Result<DecompositionMatrix, SchurError> {
    let cells = weyl_modules(s)?;
    let weight_of: Vec<usize> = (0..s.cat.plus().len()).map(|l| s.cat.plus_in_lambda(l)).collect();
    character_decomposition(&cells, &weight_of, s.cat.plus().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ariki_koike::HeckeAlgebra;
    use crate::exact_linear::{Fp, Rational};

    fn fp_ctx(n: usize, r: usize) -> SchurContext<Fp> {
        let qs = (1..=r as i64).map(|x| Fp::new(x, 5)).collect();
        let h = HeckeAlgebra::new(n, r, Fp::new(2, 5), Fp::new(3, 5), qs);
        SchurContext::new(h, Catalog::new(n, &vec![n; r])).unwrap()
    }

    #[test]
    fn plus_order_is_dominance_compatible() {
        let cat = Catalog::new(3, &[3, 3]);
        for a in 0..cat.plus().len() {
            for b in 0..a {
                assert!(!cat.plus_dominates(a, b));
            }
        }
    }

    #[test]
    fn type_a_rank_two_at_quantum_characteristic_two() {
        // q^2 = -1 kills the form on the (1,1)-weight space of W^{(2)}, which
        // then contains L^{(1,1)} once
        let s = fp_ctx(2, 1);
        let d = decomposition_matrix(&s).unwrap();
        let oracle = decomposition_matrix_by_characters(&s).unwrap();
        assert_eq!(d, oracle);
        assert_eq!(d.entries, vec![vec![1, 1], vec![0, 1]]);
        assert!(d.is_unitriangular(&s.cat));
    }

    #[test]
    fn splitting_matches_characters_at_two_two() {
        let s = fp_ctx(2, 2);
        let d = decomposition_matrix(&s).unwrap();
        assert_eq!(d, decomposition_matrix_by_characters(&s).unwrap());
        assert!(d.is_unitriangular(&s.cat));
        let cells = weyl_modules(&s).unwrap();
        let wd: Vec<usize> = cells.iter().map(CellModule::dim).collect();
        let sd: Vec<usize> = cells.iter().map(CellModule::simple_dim).collect();
        assert!(d.dimensions_consistent(&wd, &sd));
    }

    #[test]
    fn semisimple_identity() {
        let qs = vec![Rational::from_int(1), Rational::from_int(100)];
        let h = HeckeAlgebra::new(2, 2, Rational::from_int(2), Rational::from_frac(1, 2), qs);
        let s = SchurContext::new(h, Catalog::new(2, &[2, 2])).unwrap();
        assert!(decomposition_matrix(&s).unwrap().is_identity());
    }
}
