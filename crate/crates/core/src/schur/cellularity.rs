//! Coefficient-independence checks for cellular and standardly based
//! bases: `φ · φ_{ST} ≡ Σ_{S'} f_{S'} φ_{S'T}` modulo higher cells with `f`
//! independent of `T`, and the mirror statement on the right.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{normalize, SchurContext, SchurVec};
use crate::check::Coverage;
use crate::exact_linear::Field;

/// How basis elements of `S(Λ)` are organised into cells for the algebra
/// under test (all of `S(Λ)`, a subalgebra, or a quotient).
pub struct CellStructure<'a> {
    /// cell of a basis index, `None` outside the algebra
    pub cell_of: &'a dyn Fn(usize) -> Option<usize>,
    /// strict order on cells; products may leak only into greater cells
    pub greater: &'a dyn Fn(usize, usize) -> bool,
    /// `true` for a quotient: terms outside are discarded instead of being
    /// closure violations
    pub truncate: bool,
}

#[derive(Clone, Debug, Default)]
pub struct ExpansionReport {
    pub products: usize,
    pub violations: Vec<String>,
}

impl ExpansionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, o: ExpansionReport) {
        self.products += o.products;
        self.violations.extend(o.violations);
    }
}

type Coeffs<F> = Vec<(usize, F)>;

/// Coefficients of the cell-`c` part of `prod` along the free side, after
/// checking that the fixed side equals `fixed` and everything else lies in
/// greater cells.
fn cell_part<F: Field>(
    s: &SchurContext<F>,
    st: &CellStructure<'_>,
    prod: &SchurVec<F>,
    c: usize,
    fixed: usize,
    left: bool,
    what: &dyn Fn() -> String,
    report: &mut ExpansionReport,
) -> Coeffs<F> {
    let mut out = Vec::new();
    for (i, v) in prod {
        match (st.cell_of)(*i) {
            None if st.truncate => {}
            None => report.violations.push(format!("{}: term {i} outside the algebra", what())),
            Some(ci) if ci == c => {
                let lb = s.label(*i);
                let (free, fix) = if left { (lb.ps, lb.pt) } else { (lb.pt, lb.ps) };
                if fix != fixed {
                    report.violations.push(format!("{}: term {i} changes the fixed tableau", what()));
                }
                out.push((free, v.clone()));
            }
            Some(ci) => {
                if !(st.greater)(ci, c) {
                    report.violations.push(format!("{}: term {i} in a lower or incomparable cell", what()));
                }
            }
        }
    }
    out.sort_by_key(|x| x.0);
    out
}

/// Run the two-sided check for every `φ` in `phis` against every basis
/// element in `members` (indices into `S(Λ)` belonging to the algebra).
pub fn cell_expansion_report<F: Field>(
    s: &SchurContext<F>,
    st: &CellStructure<'_>,
    phis: &[SchurVec<F>],
    members: &[usize],
) -> ExpansionReport {
    let mut report = ExpansionReport::default();
    let mut by_cell: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &i in members {
        if let Some(c) = (st.cell_of)(i) {
            by_cell.entry(c).or_default().push(i);
        }
    }
    for (k, phi) in phis.iter().enumerate() {
        for (&c, elems) in &by_cell {
            // left: fix S, vary T
            let mut left: BTreeMap<usize, Coeffs<F>> = BTreeMap::new();
            let mut right: BTreeMap<usize, Coeffs<F>> = BTreeMap::new();
            for &b in elems {
                let lb = *s.label(b);
                let e = vec![(b, s.one().clone())];
                let lp = s.mul(phi, &e);
                let rp = s.mul(&e, phi);
                report.products += 2;
                let what_l = || format!("phi#{k} * basis {b}");
                let what_r = || format!("basis {b} * phi#{k}");
                let fl = cell_part(s, st, &lp, c, lb.pt, true, &what_l, &mut report);
                let fr = cell_part(s, st, &rp, c, lb.ps, false, &what_r, &mut report);
                match left.get(&lb.ps) {
                    Some(prev) if *prev != fl => report
                        .violations
                        .push(format!("phi#{k}: left coefficients depend on T in cell {c} (basis {b})")),
                    Some(_) => {}
                    None => {
                        left.insert(lb.ps, fl);
                    }
                }
                match right.get(&lb.pt) {
                    Some(prev) if *prev != fr => report
                        .violations
                        .push(format!("phi#{k}: right coefficients depend on S in cell {c} (basis {b})")),
                    Some(_) => {}
                    None => {
                        right.insert(lb.pt, fr);
                    }
                }
            }
        }
    }
    report
}

/// One random slice per `φ`: for a random cell and a random element
/// `φ_{S₀T₀}` of it, the row `{φ_{S₀T}}` and the column `{φ_{ST₀}}`, which
/// is what the independence statements compare.
pub fn sampled_expansion_report<F: Field, R: Rng>(
    s: &SchurContext<F>,
    st: &CellStructure<'_>,
    phis: &[SchurVec<F>],
    members: &[usize],
    rng: &mut R,
) -> ExpansionReport {
    let mut by_cell: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &i in members {
        if let Some(c) = (st.cell_of)(i) {
            by_cell.entry(c).or_default().push(i);
        }
    }
    let cells: Vec<&Vec<usize>> = by_cell.values().collect();
    let mut report = ExpansionReport::default();
    if cells.is_empty() {
        return report;
    }
    for phi in phis {
        let elems = cells[rng.gen_range(0..cells.len())];
        let b0 = *s.label(elems[rng.gen_range(0..elems.len())]);
        let slice: Vec<usize> = elems
            .iter()
            .copied()
            .filter(|&i| {
                let lb = s.label(i);
                lb.ps == b0.ps || lb.pt == b0.pt
            })
            .collect();
        report.merge(cell_expansion_report(s, st, std::slice::from_ref(phi), &slice));
    }
    report
}

/// The structure of `S(Λ)` itself: cells are `Λ⁺`, ordered by dominance.
/// With [`Coverage::Exhaustive`] every basis element serves as `φ` against
/// the whole basis; otherwise `count` random `φ` each meet one random slice.
pub fn full_structure_check<F: Field>(s: &SchurContext<F>, coverage: Coverage) -> ExpansionReport {
    let cell_of = |i: usize| Some(s.label(i).lambda);
    let greater = |a: usize, b: usize| s.cat.plus_dominates(a, b);
    let st = CellStructure { cell_of: &cell_of, greater: &greater, truncate: false };
    let members: Vec<usize> = (0..s.dim()).collect();
    structure_report(s, &st, &members, coverage)
}

/// Standard driver for the expansion checks on an algebra with basis
/// `members`.
pub fn structure_report<F: Field>(
    s: &SchurContext<F>,
    st: &CellStructure<'_>,
    members: &[usize],
    coverage: Coverage,
) -> ExpansionReport {
    match coverage {
        Coverage::Exhaustive => {
            let phis: Vec<SchurVec<F>> = members.iter().map(|&i| vec![(i, s.one().clone())]).collect();
            cell_expansion_report(s, st, &phis, members)
        }
        Coverage::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let phis: Vec<SchurVec<F>> =
                (0..count).map(|_| random_combination(members, s.one(), 4, &mut rng)).collect();
            sampled_expansion_report(s, st, &phis, members, &mut rng)
        }
    }
}

/// A random linear combination of `terms` elements of `basis` with small
/// nonzero coefficients.
pub fn random_combination<F: Field, R: Rng>(basis: &[usize], one: &F, terms: usize, rng: &mut R) -> SchurVec<F> {
    if basis.is_empty() {
        return Vec::new();
    }
    let v = (0..terms)
        .map(|_| (basis[rng.gen_range(0..basis.len())], one.from_i64_like(rng.gen_range(1..=6))))
        .collect();
    normalize(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ariki_koike::HeckeAlgebra;
    use crate::combinatorics::Catalog;
    use crate::exact_linear::Fp;

    #[test]
    fn schur_algebra_is_cellular() {
        let h = HeckeAlgebra::new(2, 2, Fp::new(2, 5), Fp::new(3, 5), vec![Fp::new(1, 5), Fp::new(2, 5)]);
        let s = SchurContext::new(h, Catalog::new(2, &[2, 2])).unwrap();
        let rep = full_structure_check(&s, Coverage::Exhaustive);
        assert!(rep.passed(), "{:?}", &rep.violations[..rep.violations.len().min(5)]);
        assert_eq!(rep.products, 2 * 210 * 210);
        let rep = full_structure_check(&s, Coverage::Sampled { count: 30, seed: 1 });
        assert!(rep.passed());
        assert!(rep.products > 0);
    }
}
