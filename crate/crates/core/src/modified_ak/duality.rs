//! The double centralizer property between `S̄^p` and `H̄^p`.
//!
//! Two realizations of the bimodule are used. `M̄ = ⊕_μ M̄^μ` carries the
//! left action of `S̄^p` and the right action of `H̄^p` through the
//! identification `M̄^μ ≅ φ̄_μ S̄^p φ̄_Ω`. The ideal model
//! `M_p = ⊕_μ F_α y_μ H̄^p` lives inside `H̄^p` itself; the basis
//! `m^p_{St}` built from `T_{d(s)}^* F_α y_λ T_{d(t)}` matches `m̄_{St}`.
//! Commutants are computed by solving `[X, action] = 0` directly.

use serde::Serialize;

use super::blocks::{f_alpha, h0_basis, y_lambda, Block};
use super::context::{Elem, ModifiedContext};
use super::xi::XiFamily;
use super::ModifiedError;
use crate::check::Check;
use crate::combinatorics::omega_image;
use crate::exact_linear::{EchelonBasis, Field, LinearSolver, Matrix};

/// Dimension of `{(X_v)} : P X_a = X_b Q` for each constraint, where the
/// unknown blocks have the given shapes.
struct Commutant<F: Field> {
    offsets: Vec<usize>,
    shapes: Vec<(usize, usize)>,
    ech: EchelonBasis<F>,
}

impl<F: Field> Commutant<F> {
    fn new(shapes: Vec<(usize, usize)>) -> Self {
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut total = 0;
        for &(r, c) in &shapes {
            offsets.push(total);
            total += r * c;
        }
        Commutant { offsets, shapes, ech: EchelonBasis::new(total) }
    }

    fn unknowns(&self) -> usize {
        self.ech.ambient_dim()
    }

    /// `P X_a - X_b Q = 0`.
    fn constrain(&mut self, p: &Matrix<F>, a: usize, b: usize, q: &Matrix<F>, zero: &F) {
        let (ra, ca) = self.shapes[a];
        let (rb, cb) = self.shapes[b];
        debug_assert_eq!((p.nrows(), p.ncols()), (rb, ra));
        debug_assert_eq!((q.nrows(), q.ncols()), (cb, ca));
        for i in 0..rb {
            for j in 0..ca {
                if self.ech.is_full() {
                    return;
                }
                let mut row = vec![zero.clone(); self.unknowns()];
                for k in 0..ra {
                    row[self.offsets[a] + k * ca + j].add_assign(p.get(i, k));
                }
                for k in 0..cb {
                    let v = &mut row[self.offsets[b] + i * cb + k];
                    *v = v.sub(q.get(k, j));
                }
                self.ech.insert(&row);
            }
        }
    }

    fn dim(&self) -> usize {
        self.unknowns() - self.ech.rank()
    }
}

fn span<F: Field>(dim: usize, xs: &[Elem<F>]) -> EchelonBasis<F> {
    let mut ech = EchelonBasis::new(dim);
    for x in xs {
        ech.insert(x);
    }
    ech
}

fn same_span<F: Field>(dim: usize, a: &[Elem<F>], b: &[Elem<F>]) -> bool {
    let (ea, eb) = (span(dim, a), span(dim, b));
    ea.rank() == eb.rank() && b.iter().all(|x| ea.contains(x))
}

/// Basis of `U ∩ V` for subspaces given by spanning rows.
fn intersect<F: Field>(dim: usize, u: &[Elem<F>], v: &[Elem<F>], zero: &F) -> Vec<Elem<F>> {
    let ub = span(dim, u).basis().to_vec();
    let vb = span(dim, v).basis().to_vec();
    if ub.is_empty() || vb.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<F>> = ub.iter().chain(&vb).cloned().collect();
    let m = Matrix::from_columns(&cols, dim, zero);
    m.kernel()
        .into_iter()
        .map(|c| {
            let mut out = vec![zero.clone(); dim];
            for (a, x) in c.iter().zip(&ub) {
                for (o, y) in out.iter_mut().zip(x) {
                    o.add_mul(a, y);
                }
            }
            out
        })
        .collect()
}

/// `M_p^μ = F_α y_μ H̄^p` with the right action of the basis of `H̄^p`.
struct IdealModule<F: Field> {
    basis: Vec<Elem<F>>,
    solver: LinearSolver<F>,
}

impl<F: Field> IdealModule<F> {
    fn new(mc: &ModifiedContext<'_, F>, generator: Elem<F>) -> Self {
        let all: Vec<Elem<F>> = (0..mc.dim()).map(|k| mc.mul(&generator, &mc.basis_elem(k))).collect();
        let basis = span(mc.dim(), &all).basis().to_vec();
        let solver = LinearSolver::new(&Matrix::from_columns(&basis, mc.dim(), mc.zero_scalar()));
        IdealModule { basis, solver }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coords(&self, x: &[F]) -> Option<Vec<F>> {
        self.solver.solve(x)
    }

    /// Matrix of `x ↦ x h` in the given basis (rows), which must span the ideal.
    fn action_in(&self, mc: &ModifiedContext<'_, F>, basis: &[Elem<F>], h: &[F]) -> Option<Matrix<F>> {
        let solver = LinearSolver::new(&Matrix::from_columns(basis, mc.dim(), mc.zero_scalar()));
        let rows = basis.iter().map(|v| solver.solve(&mc.mul(v, h))).collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_rows(rows, mc.zero_scalar()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub checks: Vec<Check>,
    /// `T_{d(s)}^* F_α y_λ T_{d(t)} = φ̄_{ST}` without the `q`-weights of
    /// `m_{ST}`; only true when every `d(s_1)` is trivial, so kept apart
    pub unweighted_factorization: Check,
    pub dim_schur_bar: usize,
    pub dim_end_hbar: usize,
    pub dim_hbar: usize,
    pub dim_end_schur_bar: usize,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        crate::check::all_passed(&self.checks)
    }
}

fn block_of<'b, F: Field>(blocks: &'b [Block<F>], alpha: &[usize]) -> Result<&'b Block<F>, ModifiedError> {
    blocks
        .iter()
        .find(|b| b.alpha == alpha)
        .ok_or_else(|| ModifiedError::Inconsistent(format!("no block for α = {alpha:?}")))
}

/// Action matrices on `M̄`: right action of each basis element of `H̄^p`
/// on every `M̄^μ`, and left action of each basis element of `S̄^p`.
struct BarActions<F: Field> {
    dims: Vec<usize>,
    /// `right[k][μ]`
    right: Vec<Vec<Matrix<F>>>,
    /// `(source ν, target μ, L)` with `v ↦ v L` from `M̄^ν` to `M̄^μ`
    left: Vec<(usize, usize, Matrix<F>)>,
}

fn bar_actions<F: Field>(mc: &ModifiedContext<'_, F>) -> Result<BarActions<F>, ModifiedError> {
    let s = mc.s();
    let pc = mc.pc;
    let zero = mc.zero_scalar();
    let weights = s.cat.lambda().len();
    let dims: Vec<usize> = (0..weights).map(|mu| mc.bar(mu).dim()).collect();
    let unit = |d: usize, j: usize| {
        let mut v = vec![zero.clone(); d];
        v[j] = mc.one_scalar().clone();
        v
    };
    let mut right = Vec::with_capacity(mc.dim());
    for k in 0..mc.dim() {
        let h = mc.to_schur(&mc.basis_elem(k));
        let mut per = Vec::with_capacity(weights);
        for mu in 0..weights {
            let bar = mc.bar(mu);
            let rows = (0..dims[mu]).map(|j| bar.act(pc, &unit(dims[mu], j), &h)).collect::<Result<Vec<_>, _>>()?;
            per.push(Matrix::from_rows(rows, zero));
        }
        right.push(per);
    }
    let mut left = Vec::new();
    for &i in pc.quotient_members() {
        let lb = s.label(i);
        let (mu, nu) = (lb.s.mu, lb.t.mu);
        let x = [(i, mc.one_scalar().clone())];
        let rows = (0..dims[nu])
            .map(|j| mc.bar(mu).from_schur(&pc.quotient_mul(&x, &mc.bar(nu).to_schur(&unit(dims[nu], j))), zero))
            .collect::<Result<Vec<_>, _>>()?;
        left.push((nu, mu, Matrix::from_rows(rows, zero)));
    }
    Ok(BarActions { dims, right, left })
}

/// Commutant dimensions, faithfulness of both actions, and the two basis
/// lemmas behind the ideal model, plus the description of
/// `M_p^{ν*} ∩ M_p^μ`.
pub fn duality_report<F: Field>(
    mc: &ModifiedContext<'_, F>,
    fam: &XiFamily<F>,
    blocks: &[Block<F>],
) -> Result<DualityReport, ModifiedError> {
    let s = mc.s();
    let cat = &s.cat;
    let p = &mc.pc.p;
    let zero = mc.zero_scalar().clone();
    let dim = mc.dim();
    let weights = cat.lambda().len();
    let mut checks = Vec::new();

    // weight idempotents lie in S^p, so S̄^p-maps preserve each M̄^μ
    let weights_in = (0..weights).all(|mu| s.weight_idempotent(mu).iter().all(|(i, _)| mc.pc.is_member(*i)));
    checks.push(Check::new("φ_μ ∈ S^p for every μ ∈ Λ", weights_in));

    // ----- the bar model -----
    let acts = bar_actions(mc)?;
    let dims = &acts.dims;
    let mut bad = Vec::new();
    for (nu, mu, l) in &acts.left {
        for k in 0..dim {
            if acts.right[k][*nu].mul(l) != l.mul(&acts.right[k][*mu]) {
                bad.push(format!("S̄ element M̄^{nu} → M̄^{mu} against basis element {k}"));
                break;
            }
        }
    }
    checks.push(Check::from_witnesses("the actions of S̄^p and H̄^p on M̄ commute", bad));

    // θ': S̄^p → End_{H̄^p}(M̄) is injective
    let pair_offset: Vec<Vec<usize>> = {
        let mut off = 0;
        (0..weights)
            .map(|nu| {
                (0..weights)
                    .map(|mu| {
                        let o = off;
                        off += dims[nu] * dims[mu];
                        o
                    })
                    .collect()
            })
            .collect()
    };
    let total_pairs: usize = dims.iter().sum::<usize>().pow(2);
    let mut theta = EchelonBasis::new(total_pairs);
    for (nu, mu, l) in &acts.left {
        let mut v = vec![zero.clone(); total_pairs];
        for (i, j, c) in l.nonzero_entries() {
            v[pair_offset[*nu][*mu] + i * dims[*mu] + j] = c.clone();
        }
        theta.insert(&v);
    }
    let dim_schur_bar = mc.pc.quotient_members().len();
    checks.push(
        Check::new("S̄^p → End_{H̄^p}(M̄) is injective", theta.rank() == dim_schur_bar)
            .with_witness(format!("rank {} of {dim_schur_bar}", theta.rank())),
    );

    // ρ-side: H̄^p → End_{S̄^p}(M̄) is injective
    let total_diag: usize = dims.iter().map(|d| d * d).sum();
    let mut rho = EchelonBasis::new(total_diag);
    for per in &acts.right {
        let mut v = Vec::with_capacity(total_diag);
        for m in per {
            v.extend(m.rows_vec().into_iter().flatten());
        }
        rho.insert(&v);
    }
    checks.push(
        Check::new("H̄^p → End⁰_{S̄^p}(M̄) is injective", rho.rank() == dim).with_witness(format!("rank {} of {dim}", rho.rank())),
    );

    // End⁰_{S̄^p}(M̄): block-diagonal X commuting with every φ̄_{ST}
    let mut end_s = Commutant::new(dims.iter().map(|&d| (d, d)).collect());
    for (nu, mu, l) in &acts.left {
        end_s.constrain(l, *mu, *nu, l, &zero);
    }
    let dim_end_schur_bar = end_s.dim();
    checks.push(
        Check::new("dim End⁰_{S̄^p}(M̄) = dim H̄^p", dim_end_schur_bar == dim)
            .with_witness(format!("{dim_end_schur_bar} against {dim}")),
    );

    // ----- the ideal model -----
    let f_alphas: Vec<Elem<F>> = blocks.iter().map(|b| f_alpha(mc, fam, b)).collect::<Result<_, _>>()?;
    let f_of = |alpha: &[usize]| -> Result<(&Block<F>, &Elem<F>), ModifiedError> {
        let i = blocks
            .iter()
            .position(|b| b.alpha == alpha)
            .ok_or_else(|| ModifiedError::Inconsistent(format!("no block for α = {alpha:?}")))?;
        Ok((&blocks[i], &f_alphas[i]))
    };
    let mut ys = Vec::with_capacity(weights);
    let mut ideals = Vec::with_capacity(weights);
    for mu in 0..weights {
        let comp = &cat.lambda()[mu];
        let (b, f) = f_of(&comp.alpha_p(p))?;
        let y = y_lambda(mc, b, comp)?;
        ideals.push(IdealModule::new(mc, mc.mul(f, &y)));
        ys.push(y);
    }
    let bad: Vec<String> = (0..weights)
        .filter(|&mu| ideals[mu].dim() != dims[mu])
        .map(|mu| format!("μ #{mu}: dim M_p^μ = {}, dim M̄^μ = {}", ideals[mu].dim(), dims[mu]))
        .collect();
    checks.push(Check::from_witnesses("dim M_p^μ = dim M̄^μ", bad));

    // F_α and y_λ: star-fixed, commuting
    let mut bad = Vec::new();
    for (b, f) in blocks.iter().zip(&f_alphas) {
        if mc.star(f) != *f {
            bad.push(format!("F_{:?} not star-fixed", b.alpha));
        }
        for x in h0_basis(mc, b)? {
            if mc.mul(f, &x) != mc.mul(&x, f) {
                bad.push(format!("F_{:?} does not commute with H̄^0_α", b.alpha));
                break;
            }
        }
    }
    for (mu, y) in ys.iter().enumerate() {
        if mc.star(y) != *y {
            bad.push(format!("y_μ not star-fixed for μ #{mu}"));
        }
    }
    checks.push(Check::from_witnesses("F_α, y_μ are star-fixed and F_α centralizes H̄^0_α", bad));

    // m^p_{st} = T_{d(s)}^* F_α y_λ T_{d(t)} against φ̄_{ST}: literally, and
    // with the weight q^{-l(d(s_1)) - l(d(t_1))} coming from the q-weighted m_{ST}
    let sym = s.h.sym();
    let t_rho: Vec<Elem<F>> = (0..sym.order()).map(|w| mc.rho0(&s.h.t_w(w))).collect::<Result<_, _>>()?;
    let (mut bad_lit, mut bad_cor) = (Vec::new(), Vec::new());
    let mut mst: Vec<Vec<Vec<Elem<F>>>> = Vec::with_capacity(cat.plus().len());
    for (l, lam) in cat.plus().iter().enumerate() {
        let (b, f) = f_of(&lam.alpha_p(p))?;
        let fy = mc.mul(f, &y_lambda(mc, b, lam)?);
        let ds: Vec<usize> = cat.std(l).iter().map(|t| sym.index_of(&t.d())).collect();
        let inner: Vec<usize> = cat
            .std(l)
            .iter()
            .map(|t| sym.length(sym.index_of(&omega_image(t, lam, p, &mc.omegas).t1.d())))
            .collect();
        let mut rows = Vec::with_capacity(ds.len());
        for (si, &d_s) in ds.iter().enumerate() {
            let left = mc.mul(&mc.star(&t_rho[d_s]), &fy);
            let (w, big_s) = mc.std_image[l][si];
            let bar = mc.bar(mc.omega_weight[w]);
            let labels = bar.labels();
            let mut row = Vec::with_capacity(ds.len());
            for (ti, &d_t) in ds.iter().enumerate() {
                let x = mc.mul(&left, &t_rho[d_t]);
                let j = labels
                    .iter()
                    .position(|&lab| lab == (l, big_s, ti))
                    .ok_or_else(|| ModifiedError::Inconsistent("standard pair without a basis element".into()))?;
                let k = mc.position(bar.phi()[j]).ok_or_else(|| ModifiedError::Inconsistent("φ̄_{ST} outside B^p".into()))?;
                let phi = mc.basis_elem(k);
                if x != phi {
                    bad_lit.push(format!("λ = {lam}, s #{si}, t #{ti}"));
                }
                let weight = s.h.qinv.pow((inner[si] + inner[ti]) as u32);
                if x != mc.scale(&weight, &phi) {
                    bad_cor.push(format!("λ = {lam}, s #{si}, t #{ti}"));
                }
                row.push(x);
            }
            rows.push(row);
        }
        mst.push(rows);
    }
    let unweighted_factorization = Check::from_witnesses("T_{d(s)}^* F_α y_λ T_{d(t)} = φ̄_{ST}", bad_lit);
    checks.push(Check::from_witnesses("T_{d(s)}^* F_α y_λ T_{d(t)} = q^{-l(d(s_1))-l(d(t_1))} φ̄_{ST}", bad_cor));

    // m^p_{St} is a basis of M_p^μ matching m̄_{St}
    let mut bad = Vec::new();
    for mu in 0..weights {
        let bar = mc.bar(mu);
        let mut basis = Vec::with_capacity(bar.dim());
        for (l, big_s, t) in bar.labels() {
            let mut v = mc.zero();
            for (si, fs) in cat.fibre(l, mu).iter().enumerate() {
                if *fs == Some(big_s) {
                    let c = s.h.q().pow((cat.std_length(l, si) + cat.std_length(l, t)) as u32);
                    v = mc.add(&v, &mc.scale(&c, &mst[l][si][t]));
                }
            }
            basis.push(v);
        }
        let inside = basis.iter().all(|v| ideals[mu].coords(v).is_some());
        let independent = span(dim, &basis).rank() == basis.len() && basis.len() == ideals[mu].dim();
        if !inside || !independent {
            bad.push(format!("μ #{mu}: inside = {inside}, basis = {independent}"));
        } else {
            for k in 0..dim {
                let a = ideals[mu].action_in(mc, &basis, &mc.basis_elem(k));
                if a.as_ref() != Some(&acts.right[k][mu]) {
                    bad.push(format!("μ #{mu}: action of basis element {k} differs"));
                    break;
                }
            }
        }
    }
    checks.push(Check::from_witnesses("m^p_{St} ↦ m̄_{St} is an isomorphism M_p^μ ≅ M̄^μ", bad));

    // End_{H̄^p}(M_p), the Hom spaces, and M_p^{ν*} ∩ M_p^μ
    let mut dim_end_hbar = 0;
    let mut bad_hom = Vec::new();
    let mut bad_int = Vec::new();
    let mut bad_h0 = Vec::new();
    let right_in: Vec<Vec<Matrix<F>>> = (0..weights)
        .map(|mu| {
            (0..dim)
                .map(|k| ideals[mu].action_in(mc, &ideals[mu].basis, &mc.basis_elem(k)).expect("right ideal"))
                .collect()
        })
        .collect();
    for nu in 0..weights {
        for mu in 0..weights {
            // f: M_p^ν → M_p^μ, v ↦ v Y
            let mut hom = Commutant::new(vec![(ideals[nu].dim(), ideals[mu].dim())]);
            for k in 0..dim {
                hom.constrain(&right_in[nu][k], 0, 0, &right_in[mu][k], &zero);
            }
            let d = hom.dim();
            dim_end_hbar += d;
            let expected = mc
                .pc
                .quotient_members()
                .iter()
                .filter(|&&i| {
                    let lb = s.label(i);
                    lb.s.mu == mu && lb.t.mu == nu
                })
                .count();
            if d != expected {
                bad_hom.push(format!("Hom(M_p^{nu}, M_p^{mu}) = {d}, H̄_μν = {expected}"));
            }
            let star_nu: Vec<Elem<F>> = ideals[nu].basis.iter().map(|x| mc.star(x)).collect();
            let int = intersect(dim, &star_nu, &ideals[mu].basis, &zero);
            let int_dim = span(dim, &int).rank();
            if int_dim != d {
                bad_int.push(format!("(ν, μ) = ({nu}, {mu}): Hom {d}, intersection {int_dim}"));
            }
            let (a_mu, a_nu) = (cat.lambda()[mu].alpha_p(p), cat.lambda()[nu].alpha_p(p));
            if a_mu == a_nu {
                let b = block_of(blocks, &a_mu)?;
                let (_, f) = f_of(&a_mu)?;
                let h0 = h0_basis(mc, b)?;
                let left: Vec<Elem<F>> = h0.iter().map(|x| mc.mul(x, &ys[nu])).collect();
                let right: Vec<Elem<F>> = h0.iter().map(|x| mc.mul(&ys[mu], x)).collect();
                let rhs: Vec<Elem<F>> = intersect(dim, &left, &right, &zero).iter().map(|x| mc.mul(f, x)).collect();
                if !same_span(dim, &int, &rhs) {
                    bad_h0.push(format!("(ν, μ) = ({nu}, {mu})"));
                }
            } else if int_dim != 0 {
                bad_h0.push(format!("(ν, μ) = ({nu}, {mu}) with different α"));
            }
        }
    }
    checks.push(Check::from_witnesses("dim Hom_{H̄^p}(M_p^ν, M_p^μ) = dim H̄_μν", bad_hom));
    checks.push(Check::from_witnesses("Hom_{H̄^p}(M_p^ν, M_p^μ) ≅ M_p^{ν*} ∩ M_p^μ", bad_int));
    checks.push(Check::from_witnesses("M_p^{ν*} ∩ M_p^μ = F_α(H̄^0_α y_ν ∩ y_μ H̄^0_α)", bad_h0));
    checks.push(
        Check::new("dim End_{H̄^p}(M_p) = dim S̄^p", dim_end_hbar == dim_schur_bar)
            .with_witness(format!("{dim_end_hbar} against {dim_schur_bar}")),
    );

    Ok(DualityReport { checks, unweighted_factorization, dim_schur_bar, dim_end_hbar, dim_hbar: dim, dim_end_schur_bar })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::ParabolicShape;
    use crate::modified_ak::{blocks, xi_family};
    use crate::parabolic::context::tests::ctx;
    use crate::parabolic::ParabolicContext;

    #[test]
    fn commutant_of_scalars_is_everything() {
        let z = crate::exact_linear::Fp::new(0, 5);
        let one = crate::exact_linear::Fp::new(1, 5);
        let mut c = Commutant::new(vec![(2, 2)]);
        c.constrain(&Matrix::identity(2, &z), 0, 0, &Matrix::identity(2, &z), &z);
        assert_eq!(c.dim(), 4);
        let mut m = Matrix::zeros(2, 2, &z);
        m.set(0, 1, one);
        c.constrain(&m, 0, 0, &m, &z);
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn duality_two_two() {
        let s = ctx(2, 2);
        for p in [ParabolicShape::finest(2), ParabolicShape::whole(2)] {
            let pc = ParabolicContext::new(&s, p.clone()).unwrap();
            let mc = ModifiedContext::new(&pc).unwrap();
            let fam = xi_family(&mc).unwrap();
            let bl = blocks(&mc, &fam).unwrap();
            let rep = duality_report(&mc, &fam, &bl).unwrap();
            assert!(rep.passed(), "{p}: {:?}", rep.checks);
            assert_eq!(rep.unweighted_factorization.passed, p.g() > 1);
            assert_eq!(rep.dim_end_hbar, rep.dim_schur_bar);
            assert_eq!(rep.dim_end_schur_bar, 8);
        }
    }
}
