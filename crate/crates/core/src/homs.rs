//! Tableau homomorphisms `Θ_T` between permutation modules, represented by
//! row-equivalence classes (count matrices), together with the row-move maps
//! `ψ^{d,t}` that cut out Specht modules via the kernel intersection theorem.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Node, Partition};

/// The specialisation of `q` used when evaluating coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QParam {
    MinusOne,
    One,
}

impl QParam {
    fn sign(self, x: usize) -> i64 {
        match self {
            QParam::MinusOne if x % 2 == 1 => -1,
            _ => 1,
        }
    }
}

/// `[a choose b]` at the given `q`; zero unless `0 ≤ b ≤ a`.
///
/// At `q = −1` this is `C(⌊a/2⌋, ⌊b/2⌋)` unless `a` is even and `b` odd.
pub fn quantum_binomial(a: i64, b: i64, q: QParam) -> i64 {
    if b < 0 || b > a {
        return 0;
    }
    match q {
        QParam::One => num_integer::binomial(a, b),
        QParam::MinusOne if a % 2 == 0 && b % 2 == 1 => 0,
        QParam::MinusOne => num_integer::binomial(a / 2, b / 2),
    }
}

/// A row-equivalence class of tableaux: `counts[i][j]` is the number of
/// entries `j + 1` in row `i + 1`. Every row has one column per part of the
/// content, so zero parts of a composition are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CountTableau {
    shape: Partition,
    counts: Vec<Vec<usize>>,
}

impl CountTableau {
    /// Checks that row sums match a partition; the content is read off the
    /// column sums.
    pub fn new(counts: Vec<Vec<usize>>) -> Result<Self> {
        let width = counts.first().map_or(0, Vec::len);
        if counts.iter().any(|r| r.len() != width) {
            return Err(Error::Precondition(
                "count matrix rows have different lengths".into(),
            ));
        }
        let shape = Partition::new(counts.iter().map(|r| r.iter().sum()).collect())?;
        if shape.len() != counts.len() {
            return Err(Error::Precondition("count matrix has an empty row".into()));
        }
        Ok(CountTableau { shape, counts })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn counts(&self) -> &[Vec<usize>] {
        &self.counts
    }

    /// `T_{i,j}` with 1-based indices; zero outside the matrix.
    pub fn get(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 {
            return 0;
        }
        self.counts
            .get(i - 1)
            .and_then(|r| r.get(j - 1))
            .copied()
            .unwrap_or(0)
    }

    pub fn content(&self) -> Vec<usize> {
        let width = self.counts.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.counts.iter().map(|r| r[j]).sum())
            .collect()
    }

    /// Rows of the row-standard representative, read left to right and top
    /// to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.counts
            .iter()
            .flat_map(|row| {
                row.iter()
                    .enumerate()
                    .flat_map(|(j, &c)| std::iter::repeat_n(j + 1, c))
            })
            .collect()
    }
}

/// Lexicographic order of reading words, then shape.
impl Ord for CountTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.reading_word()
            .cmp(&other.reading_word())
            .then_with(|| self.shape.cmp(&other.shape))
            .then_with(|| self.counts.cmp(&other.counts))
    }
}

impl PartialOrd for CountTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rows of the row-standard representative separated by `/`, e.g. `111234/122234`.
impl fmt::Display for CountTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.counts.first().map_or(0, Vec::len) > 9;
        for (i, row) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            let mut first = true;
            for (j, &c) in row.iter().enumerate() {
                for _ in 0..c {
                    if wide && !first {
                        f.write_str(" ")?;
                    }
                    write!(f, "{}", j + 1)?;
                    first = false;
                }
            }
        }
        Ok(())
    }
}

/// `𝒯(shape, content)`, sorted.
pub fn enumerate_tableaux(shape: &Partition, content: &[usize]) -> Vec<CountTableau> {
    if shape.size() != content.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut counts = Vec::with_capacity(shape.len());
    let mut remaining = content.to_vec();
    fill_rows(shape.parts(), &mut remaining, &mut counts, &mut out);
    let mut tableaux: Vec<CountTableau> = out
        .into_iter()
        .map(|counts| CountTableau {
            shape: shape.clone(),
            counts,
        })
        .collect();
    tableaux.sort();
    tableaux
}

fn fill_rows(
    rows: &[usize],
    remaining: &mut Vec<usize>,
    counts: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let Some((&len, rest)) = rows.split_first() else {
        out.push(counts.clone());
        return;
    };
    let mut row = vec![0; remaining.len()];
    fill_row(len, 0, &mut row, remaining, &mut |row, remaining| {
        counts.push(row.to_vec());
        fill_rows(rest, remaining, counts, out);
        counts.pop();
    });
}

/// Every way to distribute `left` entries over columns `j..`, bounded by
/// `remaining`.
fn fill_row(
    left: usize,
    j: usize,
    row: &mut Vec<usize>,
    remaining: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize], &mut Vec<usize>),
) {
    if j == row.len() {
        if left == 0 {
            f(row, remaining);
        }
        return;
    }
    let cap = remaining[j].min(left);
    for c in (0..=cap).rev() {
        row[j] = c;
        remaining[j] -= c;
        fill_row(left - c, j + 1, row, remaining, f);
        remaining[j] += c;
    }
    row[j] = 0;
}

/// `Σ c_T Θ_T` over tableaux of a fixed shape and content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomElement {
    shape: Partition,
    content: Vec<usize>,
    terms: BTreeMap<CountTableau, Rational64>,
}

impl HomElement {
    pub fn zero(shape: Partition, content: Vec<usize>) -> Self {
        HomElement {
            shape,
            content,
            terms: BTreeMap::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn content(&self) -> &[usize] {
        &self.content
    }

    pub fn add_term(&mut self, t: CountTableau, c: Rational64) -> Result<()> {
        if t.shape != self.shape || t.content() != self.content {
            return Err(Error::Precondition(format!(
                "tableau {t} does not have shape {} and content {:?}",
                self.shape, self.content
            )));
        }
        if c == Rational64::from_integer(0) {
            return Ok(());
        }
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == Rational64::from_integer(0) {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn coeff(&self, t: &CountTableau) -> Rational64 {
        self.terms
            .get(t)
            .copied()
            .unwrap_or_else(|| Rational64::from_integer(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing tableau order.
    pub fn iter(&self) -> impl Iterator<Item = (&CountTableau, &Rational64)> {
        self.terms.iter()
    }
}

impl fmt::Display for HomElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let neg = *c < Rational64::from_integer(0);
            let a = if neg { -*c } else { *c };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if a != Rational64::from_integer(1) {
                write!(f, "{a} ")?;
            }
            write!(f, "Θ[{t}]")?;
        }
        Ok(())
    }
}

/// The map `ψ^{d,t}`: `t` of the entries `d + 1` become `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RowMoveTarget {
    pub d: usize,
    pub t: usize,
}

impl RowMoveTarget {
    pub fn new(d: usize, t: usize) -> Self {
        RowMoveTarget { d, t }
    }

    /// `λ^{d,t}`; requires `d ≥ 1` and `1 ≤ t ≤ λ_{d+1}`.
    pub fn target(&self, content: &[usize]) -> Result<Vec<usize>> {
        let invalid = Error::InvalidMove {
            d: self.d,
            t: self.t,
        };
        if self.d == 0 || self.t == 0 || self.d >= content.len() || self.t > content[self.d] {
            return Err(invalid);
        }
        let mut out = content.to_vec();
        out[self.d - 1] += self.t;
        out[self.d] -= self.t;
        Ok(out)
    }

    /// Every valid `(d, t)` for `content`.
    pub fn all_for(content: &[usize]) -> Vec<RowMoveTarget> {
        (1..content.len())
            .flat_map(|d| (1..=content[d]).map(move |t| RowMoveTarget { d, t }))
            .collect()
    }
}

/// One summand `b_{TV} Θ_V` of `ψ^{d,t} ∘ Θ_T`, with the per-row move counts `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTerm {
    pub v: CountTableau,
    pub beta: Vec<usize>,
    pub coeff: i64,
}

/// The summands of `ψ^{d,t} ∘ Θ_T`, one for each `V ∈ 𝒱_T`, including those
/// whose coefficient vanishes.
pub fn psi_terms(t: &CountTableau, mv: RowMoveTarget, q: QParam) -> Result<Vec<PsiTerm>> {
    let content = t.content();
    mv.target(&content)?;
    let (d, rows) = (mv.d, t.counts.len());
    let available: Vec<usize> = (1..=rows).map(|i| t.get(i, d + 1)).collect();
    let mut out = Vec::new();
    let mut beta = vec![0; rows];
    distribute(mv.t, 0, &available, &mut beta, &mut |beta| {
        let mut counts = t.counts.clone();
        for (i, &b) in beta.iter().enumerate() {
            counts[i][d - 1] += b;
            counts[i][d] -= b;
        }
        // x = Σ_i (V_{i,d} − T_{i,d}) Σ_{k>i} T_{k,d}
        let x: usize = (1..=rows)
            .map(|i| beta[i - 1] * (i + 1..=rows).map(|k| t.get(k, d)).sum::<usize>())
            .sum();
        let product: i64 = (1..=rows)
            .map(|i| quantum_binomial((t.get(i, d) + beta[i - 1]) as i64, t.get(i, d) as i64, q))
            .product();
        out.push(PsiTerm {
            v: CountTableau {
                shape: t.shape.clone(),
                counts,
            },
            beta: beta.to_vec(),
            coeff: q.sign(x) * product,
        });
    });
    Ok(out)
}

fn distribute(
    left: usize,
    i: usize,
    available: &[usize],
    beta: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if i == available.len() {
        if left == 0 {
            f(beta);
        }
        return;
    }
    for b in 0..=available[i].min(left) {
        beta[i] = b;
        distribute(left - b, i + 1, available, beta, f);
    }
    beta[i] = 0;
}

/// `ψ^{d,t} ∘ Θ_T = Σ_{V ∈ 𝒱_T} b^{(q)}_{TV} Θ_V`.
pub fn psi_compose(t: &CountTableau, mv: RowMoveTarget, q: QParam) -> Result<HomElement> {
    let content = mv.target(&t.content())?;
    let mut out = HomElement::zero(t.shape.clone(), content);
    for term in psi_terms(t, mv, q)? {
        out.add_term(term.v, Rational64::from_integer(term.coeff))?;
    }
    Ok(out)
}

/// `ψ^{d,t} ∘ θ`.
pub fn psi_apply(theta: &HomElement, mv: RowMoveTarget, q: QParam) -> Result<HomElement> {
    let content = mv.target(&theta.content)?;
    let mut out = HomElement::zero(theta.shape.clone(), content);
    for (t, c) in &theta.terms {
        for term in psi_terms(t, mv, q)? {
            out.add_term(term.v, c * Rational64::from_integer(term.coeff))?;
        }
    }
    Ok(out)
}

/// The moves `(d, t)` with `ψ^{d,t} ∘ θ ≠ 0`. Empty iff the image of `θ` lies
/// in the Specht module `S^λ`, `λ` being the content.
pub fn kernel_failures(theta: &HomElement, q: QParam) -> Result<Vec<RowMoveTarget>> {
    let mut failed = Vec::new();
    for mv in RowMoveTarget::all_for(&theta.content) {
        if !psi_apply(theta, mv, q)?.is_zero() {
            failed.push(mv);
        }
    }
    Ok(failed)
}

/// Whether `ψ^{d,t} ∘ θ = 0` for every `d ≥ 1` and `1 ≤ t ≤ λ_{d+1}`. A
/// `θ` whose content is not `λ` fails.
pub fn kernel_check(theta: &HomElement, lambda: &Partition, q: QParam) -> bool {
    if theta.is_zero() {
        return true;
    }
    let content = trim_zeros(&theta.content);
    if content != lambda.parts() {
        return false;
    }
    matches!(kernel_failures(theta, q), Ok(f) if f.is_empty())
}

fn trim_zeros(v: &[usize]) -> &[usize] {
    let end = v.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
    &v[..end]
}

/// A non-zero `φ = Σ a_T Θ_T : M^ν → S^ν` at `q = 1`, with coprime integer
/// coefficients and positive leading coefficient in tableau order.
pub fn specht_seed(nu: &Partition) -> Result<HomElement> {
    let content = nu.parts().to_vec();
    let basis = enumerate_tableaux(nu, &content);
    let index: BTreeMap<&CountTableau, usize> =
        basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut solver = NullspaceSolver::new(basis.len());
    for mv in RowMoveTarget::all_for(&content) {
        let target = mv.target(&content)?;
        let mut rows: BTreeMap<CountTableau, Vec<i128>> = BTreeMap::new();
        for t in &basis {
            for term in psi_terms(t, mv, QParam::One)? {
                if term.coeff != 0 {
                    rows.entry(term.v).or_insert_with(|| vec![0; basis.len()])[index[t]] +=
                        term.coeff as i128;
                }
            }
        }
        debug_assert!(rows.keys().all(|v| v.content() == target));
        for row in rows.into_values() {
            solver.add_row(row);
        }
    }
    let mut null = solver.nullspace();
    if null.len() != 1 {
        return Err(Error::Internal(format!(
            "Hom(M^{nu}, S^{nu}) has dimension {} instead of 1",
            null.len()
        )));
    }
    let mut coeffs = null.pop().unwrap();
    if coeffs.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
        coeffs.iter_mut().for_each(|c| *c = -*c);
    }
    let mut seed = HomElement::zero(nu.clone(), content);
    for (t, c) in basis.into_iter().zip(coeffs) {
        let c = i64::try_from(c)
            .map_err(|_| Error::Internal(format!("seed coefficient {c} overflows")))?;
        seed.add_term(t, Rational64::from_integer(c))?;
    }
    Ok(seed)
}

/// Incremental fraction-free reduction to reduced row echelon form.
struct NullspaceSolver {
    cols: usize,
    /// `(pivot column, row)`; each row has zeros in every other pivot column.
    pivots: Vec<(usize, Vec<i128>)>,
}

impl NullspaceSolver {
    fn new(cols: usize) -> Self {
        NullspaceSolver {
            cols,
            pivots: Vec::new(),
        }
    }

    fn add_row(&mut self, mut row: Vec<i128>) {
        for (c, p) in &self.pivots {
            if row[*c] != 0 {
                let (a, b) = (p[*c], row[*c]);
                row.iter_mut()
                    .zip(p)
                    .for_each(|(r, &x)| *r = a * *r - b * x);
                normalise(&mut row);
            }
        }
        let Some(c) = row.iter().position(|&x| x != 0) else {
            return;
        };
        if row[c] < 0 {
            row.iter_mut().for_each(|x| *x = -*x);
        }
        for (_, p) in &mut self.pivots {
            if p[c] != 0 {
                let (a, b) = (row[c], p[c]);
                p.iter_mut()
                    .zip(&row)
                    .for_each(|(r, &x)| *r = a * *r - b * x);
                normalise(p);
            }
        }
        self.pivots.push((c, row));
    }

    /// A basis of integer vectors, each with coprime entries.
    fn nullspace(&self) -> Vec<Vec<i128>> {
        let pivot_cols: Vec<usize> = self.pivots.iter().map(|(c, _)| *c).collect();
        let scale = self
            .pivots
            .iter()
            .fold(1i128, |acc, (c, p)| acc.lcm(&p[*c]));
        (0..self.cols)
            .filter(|f| !pivot_cols.contains(f))
            .map(|f| {
                let mut x = vec![0i128; self.cols];
                x[f] = scale;
                for (c, p) in &self.pivots {
                    x[*c] = -p[f] * (scale / p[*c]);
                }
                normalise(&mut x);
                x
            })
            .collect()
    }
}

fn normalise(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// `T̂`: `T̂_{i,j} = 2 T_{i,j} + 1` for `j ≤ ξ′_i`, else `2 T_{i,j}`, over
/// `rows` rows and `width` columns.
pub fn hat_tableau(t: &CountTableau, xi: &Partition, rows: usize, width: usize) -> CountTableau {
    let xi_conj = xi.conjugate();
    let counts: Vec<Vec<usize>> = (1..=rows)
        .map(|i| {
            (1..=width)
                .map(|j| 2 * t.get(i, j) + usize::from(j <= xi_conj.part(i)))
                .collect()
        })
        .collect();
    let shape = Partition::from_parts_unchecked(counts.iter().map(|r| r.iter().sum()).collect());
    CountTableau { shape, counts }
}

/// Inverse of [`hat_tableau`] when `v` is a hatted tableau of `ν.len()` rows.
pub fn unhat_tableau(v: &CountTableau, xi: &Partition, nu_rows: usize) -> Option<CountTableau> {
    let xi_conj = xi.conjugate();
    let width = v.counts.first().map_or(0, Vec::len);
    for i in nu_rows + 1..=v.counts.len() {
        for j in 1..=width {
            if v.get(i, j) != usize::from(j <= xi_conj.part(i)) {
                return None;
            }
        }
    }
    let counts: Vec<Vec<usize>> = (1..=nu_rows)
        .map(|i| {
            (1..=width)
                .map(|j| {
                    let rest = v.get(i, j).checked_sub(usize::from(j <= xi_conj.part(i)))?;
                    (rest % 2 == 0).then_some(rest / 2)
                })
                .collect::<Option<Vec<usize>>>()
        })
        .collect::<Option<_>>()?;
    let shape = Partition::new(counts.iter().map(|r| r.iter().sum()).collect()).ok()?;
    (shape.len() == nu_rows).then_some(CountTableau { shape, counts })
}

/// The homomorphism `θ : M^μ → S^λ` built from `ν` and `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MattsHom {
    pub nu: Partition,
    pub xi: Partition,
    /// `λ_i = ξ_i + 2ν_i`.
    pub lambda: Partition,
    /// `μ_i = ξ′_i + 2ν_i`.
    pub mu: Partition,
    pub seed: HomElement,
    pub theta: HomElement,
}

/// `λ`, `μ` and `θ = Σ a_T Θ_{T̂}`. Requires `ν ≠ ∅` and `ξ_{l−1} ≥ l` for
/// `l = ν′_1`; the condition is vacuous when `l = 1`.
pub fn mattshom_build(nu: &Partition, xi: &Partition) -> Result<MattsHom> {
    let l = nu.len();
    if l == 0 {
        return Err(Error::Precondition("ν must be non-empty".into()));
    }
    if l >= 2 && xi.part(l - 1) < l {
        return Err(Error::Precondition(format!(
            "ξ_{} = {} is smaller than l = {l}",
            l - 1,
            xi.part(l - 1)
        )));
    }
    let xi_conj = xi.conjugate();
    let lambda_len = xi.len().max(l);
    let lambda = Partition::new(
        (1..=lambda_len)
            .map(|i| xi.part(i) + 2 * nu.part(i))
            .collect(),
    )?;
    let mu_len = xi_conj.len().max(l);
    let mu = Partition::new(
        (1..=mu_len)
            .map(|i| xi_conj.part(i) + 2 * nu.part(i))
            .collect(),
    )?;

    let seed = specht_seed(nu)?;
    let mut theta = HomElement::zero(mu.clone(), lambda.parts().to_vec());
    for (t, c) in seed.iter() {
        let padded = pad_width(t, lambda.len());
        theta.add_term(hat_tableau(&padded, xi, mu.len(), lambda.len()), *c)?;
    }
    if theta.is_zero() {
        return Err(Error::Internal(format!(
            "θ vanished for ν = {nu}, ξ = {xi}"
        )));
    }
    Ok(MattsHom {
        nu: nu.clone(),
        xi: xi.clone(),
        lambda,
        mu,
        seed,
        theta,
    })
}

fn pad_width(t: &CountTableau, width: usize) -> CountTableau {
    let counts = t
        .counts
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(width.max(r.len()), 0);
            r
        })
        .collect();
    CountTableau {
        shape: t.shape.clone(),
        counts,
    }
}

/// Adding `added` and removing `removed` (same residue, `added` in an earlier
/// row) gives a non-zero map `S^μ → S^λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarterPayneMove {
    pub added: Node,
    pub removed: Node,
    pub mu: Partition,
}

/// Every addable/removable pair of equal residue with the addable node in a
/// strictly higher row, ordered by addable row then removable row.
pub fn carter_payne_moves(lambda: &Partition) -> Vec<CarterPayneMove> {
    let removable = lambda.removable_nodes(None);
    lambda
        .addable_nodes(None)
        .into_iter()
        .flat_map(|a| {
            removable
                .iter()
                .filter(move |r| r.row > a.row && r.residue() == a.residue())
                .map(move |&r| CarterPayneMove {
                    added: a,
                    removed: r,
                    mu: lambda.with_node_added(a).with_node_removed(r),
                })
        })
        .collect()
}

/// The first pair of [`carter_payne_moves`].
pub fn carter_payne_target(lambda: &Partition) -> Option<CarterPayneMove> {
    carter_payne_moves(lambda).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ct(rows: &[&[usize]]) -> CountTableau {
        CountTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn quantum_binomials_at_minus_one() {
        assert_eq!(quantum_binomial(2, 1, QParam::MinusOne), 0);
        assert_eq!(quantum_binomial(3, 2, QParam::MinusOne), 1);
        assert_eq!(quantum_binomial(4, 2, QParam::MinusOne), 2);
        assert_eq!(quantum_binomial(4, 2, QParam::One), 6);
        assert_eq!(quantum_binomial(3, 4, QParam::MinusOne), 0);
        assert_eq!(quantum_binomial(3, -1, QParam::One), 0);
    }

    /// `[a choose b]` as a polynomial in `q`, built as
    /// `Π_{k=1}^{b} [a−b+k] / [k]` with exact polynomial division.
    fn gaussian_binomial(a: usize, b: usize) -> Vec<i128> {
        let qint = |k: usize| vec![1i128; k];
        let mul = |x: &[i128], y: &[i128]| {
            let mut out = vec![0i128; x.len() + y.len() - 1];
            for (i, &a) in x.iter().enumerate() {
                for (j, &b) in y.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        };
        let div = |x: &[i128], y: &[i128]| {
            let mut rem = x.to_vec();
            let mut out = vec![0i128; x.len() - y.len() + 1];
            for k in (0..out.len()).rev() {
                let c = rem[k + y.len() - 1] / y[y.len() - 1];
                out[k] = c;
                for (j, &b) in y.iter().enumerate() {
                    rem[k + j] -= c * b;
                }
            }
            assert!(rem.iter().all(|&r| r == 0), "inexact division");
            out
        };
        let mut g = vec![1i128];
        for k in 1..=b {
            g = div(&mul(&g, &qint(a - b + k)), &qint(k));
        }
        g
    }

    #[test]
    fn quantum_binomial_matches_polynomial_evaluation() {
        for a in 0..=40usize {
            for b in 0..=a {
                let poly = gaussian_binomial(a, b);
                let at = |q: i128| poly.iter().rev().fold(0i128, |acc, &c| acc * q + c);
                assert_eq!(
                    quantum_binomial(a as i64, b as i64, QParam::MinusOne) as i128,
                    at(-1),
                    "{a} {b}"
                );
                assert_eq!(
                    quantum_binomial(a as i64, b as i64, QParam::One) as i128,
                    at(1),
                    "{a} {b}"
                );
            }
        }
    }

    #[test]
    fn tableau_enumeration_and_order() {
        let ts = enumerate_tableaux(&p("1,1"), &[1, 1]);
        assert_eq!(ts, vec![ct(&[&[1, 0], &[0, 1]]), ct(&[&[0, 1], &[1, 0]])]);
        assert_eq!(ts[0].to_string(), "1/2");
        assert_eq!(enumerate_tableaux(&p("2,1"), &[2, 1]).len(), 2);
        assert_eq!(enumerate_tableaux(&p("1,1,1"), &[1, 1, 1]).len(), 6);
        assert!(enumerate_tableaux(&p("2"), &[1]).is_empty());
        let t = ct(&[&[3, 0, 2], &[1, 2, 0], &[0, 1, 0]]);
        assert_eq!(t.content(), vec![4, 3, 2]);
        assert_eq!(t.to_string(), "11133/122/2");
    }

    #[test]
    fn single_entry_move() {
        let t1 = ct(&[&[1, 0], &[0, 1]]);
        let e = psi_compose(&t1, RowMoveTarget::new(1, 1), QParam::One).unwrap();
        assert_eq!(e.len(), 1);
        let (v, c) = e.iter().next().unwrap();
        assert_eq!(v, &ct(&[&[1, 0], &[1, 0]]));
        assert_eq!(*c, Rational64::from_integer(1));
        assert!(matches!(
            psi_compose(&t1, RowMoveTarget::new(1, 2), QParam::One),
            Err(Error::InvalidMove { d: 1, t: 2 })
        ));
        assert!(psi_compose(&t1, RowMoveTarget::new(2, 1), QParam::One).is_err());
    }

    #[test]
    fn full_row_move_is_one_binomial() {
        // row 1 holds 1,1,2,2; moving both 2s gives V_{1,1} = 4 over T_{1,1} = 2
        let t = ct(&[&[2, 2], &[1, 0]]);
        let terms = psi_terms(&t, RowMoveTarget::new(1, 2), QParam::MinusOne).unwrap();
        assert_eq!(terms.len(), 1);
        // x = 2 · T_{2,1} = 2
        assert_eq!(terms[0].coeff, quantum_binomial(4, 2, QParam::MinusOne));
    }

    #[test]
    fn seeds() {
        let s = specht_seed(&p("1,1")).unwrap();
        let ts = enumerate_tableaux(&p("1,1"), &[1, 1]);
        assert_eq!(s.coeff(&ts[0]), Rational64::from_integer(1));
        assert_eq!(s.coeff(&ts[1]), Rational64::from_integer(-1));
        let s = specht_seed(&p("1")).unwrap();
        assert_eq!(s.len(), 1);
        for nu in ["2,1", "3,1", "2,2", "2,1,1", "1,1,1"] {
            let s = specht_seed(&p(nu)).unwrap();
            assert!(kernel_check(&s, &p(nu), QParam::One), "{nu}: {s}");
        }
    }

    #[test]
    fn mattshom_worked_example() {
        let h = mattshom_build(&p("1,1"), &p("2,2,2,2")).unwrap();
        assert_eq!(h.lambda, p("4,4,2,2"));
        assert_eq!(h.mu, p("6,6"));
        let t1 = ct(&[&[3, 1, 1, 1], &[1, 3, 1, 1]]);
        let t2 = ct(&[&[1, 3, 1, 1], &[3, 1, 1, 1]]);
        assert_eq!(t1.to_string(), "111234/122234");
        assert_eq!(h.theta.len(), 2);
        assert_eq!(h.theta.coeff(&t1), Rational64::from_integer(1));
        assert_eq!(h.theta.coeff(&t2), Rational64::from_integer(-1));
        assert!(kernel_check(&h.theta, &h.lambda, QParam::MinusOne));
        assert!(!kernel_check(&h.theta, &h.lambda, QParam::One));
        assert!(!h.lambda.regularise().dominates(&h.mu).unwrap());
    }

    #[test]
    fn mattshom_preconditions() {
        assert!(matches!(
            mattshom_build(&Partition::empty(), &p("2")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            mattshom_build(&p("1,1"), &p("1,1")),
            Err(Error::Precondition(_))
        ));
        let h = mattshom_build(&p("1,1"), &p("3,3,3,3")).unwrap();
        assert!(kernel_check(&h.theta, &h.lambda, QParam::MinusOne));
        let h = mattshom_build(&p("2"), &p("1")).unwrap();
        assert!(kernel_check(&h.theta, &h.lambda, QParam::MinusOne));
    }

    #[test]
    fn zero_element_is_in_every_kernel() {
        assert!(kernel_check(
            &HomElement::zero(p("2"), vec![1, 1]),
            &p("1,1"),
            QParam::One
        ));
    }

    #[test]
    fn hat_round_trip() {
        let xi = p("2,2,2,2");
        for t in enumerate_tableaux(&p("1,1"), &[1, 1]) {
            let h = hat_tableau(&pad_width(&t, 4), &xi, 2, 4);
            assert_eq!(unhat_tableau(&h, &xi, 2), Some(pad_width(&t, 4)));
        }
    }

    #[test]
    fn carter_payne_targets() {
        let m = carter_payne_target(&p("7,4,3,3,1")).unwrap();
        assert_eq!((m.added, m.removed), (Node::new(1, 8), Node::new(4, 3)));
        assert_eq!(m.mu, p("8,4,3,2,1"));
        assert!(carter_payne_target(&p("1")).is_none());
        assert!(carter_payne_target(&Partition::empty()).is_none());
        let m = carter_payne_target(&p("2,2")).unwrap();
        assert_eq!(
            (m.added, m.removed, m.mu),
            (Node::new(1, 3), Node::new(2, 2), p("3,1"))
        );
    }
}
