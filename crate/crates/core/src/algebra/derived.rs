//! Algebras built from other algebras.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Mat;

use super::{Algebra, AlgebraData, Provenance};

/// `R[x]/(x^t)` together with the embedding of `R` as the degree-0 slice.
#[derive(Clone, Debug)]
pub struct Truncated {
    pub algebra: Arc<Algebra>,
    /// `dim S x dim R` matrix of the embedding.
    pub embedding: Mat,
}

fn x_power_label(base: &str, j: usize) -> String {
    match j {
        0 => base.to_string(),
        1 => format!("{base}*x"),
        _ => format!("{base}*x^{j}"),
    }
}

/// `R[x]/(x^t)` with central `x`; basis element `r_i x^j` sits at index `j * dim R + i`.
pub fn truncated_extension(r: &Arc<Algebra>, t: usize) -> Result<Truncated> {
    if t == 0 {
        return Err(Error::InvalidAlgebra("truncation degree must be at least 1".into()));
    }
    let field = r.field();
    let d = r.dim();
    let n = t * d;
    // x acts on the power index by shifting it up, killing x^(t-1).
    let mut shift = Mat::zeros(field, t, t);
    for j in 0..t.saturating_sub(1) {
        shift.set(j + 1, j, &field.one());
    }
    let mut shift_pow = vec![Mat::identity(field, t)];
    for j in 1..t {
        shift_pow.push(&shift * &shift_pow[j - 1]);
    }
    let mut left = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for (j, sp) in shift_pow.iter().enumerate() {
        for i in 0..d {
            left.push(sp.kron(r.left(i)));
            labels.push(x_power_label(r.label_of(i), j));
        }
    }
    let mut embedding = Mat::zeros(field, n, d);
    embedding.set_block(0, 0, &Mat::identity(field, d));
    let unit = &embedding * r.unit();
    let idempotents = r.idempotents().map(|ids| ids.iter().map(|e| &embedding * e).collect());
    let r_rad = r.radical();
    let upper: Vec<usize> = (d..n).collect();
    let upper = Mat::identity(field, n).select_cols(&upper);
    let closed_radical = Mat::hstack(field, n, &[&(&embedding * r_rad), &upper]);
    let algebra = Algebra::new_trusted(AlgebraData {
        field,
        labels,
        left,
        unit,
        idempotents,
        blocks: Vec::new(),
        closed_radical: Some(closed_radical),
        provenance: Provenance::new("truncated", Some(format!("t = {t} over a dim {d} algebra"))),
    });
    Ok(Truncated { algebra, embedding })
}

pub(super) fn opposite_data(a: &Algebra) -> AlgebraData {
    let n = a.dim();
    let left = (0..n).map(|i| a.right_mult(&a.basis_vector(i))).collect();
    AlgebraData {
        field: a.field(),
        labels: a.labels().to_vec(),
        left,
        unit: a.unit().clone(),
        idempotents: a.idempotents().map(|s| s.to_vec()),
        blocks: a.block_idempotents().to_vec(),
        closed_radical: Some(a.radical().clone()),
        provenance: Provenance::new("opposite", Some(a.provenance().constructor.clone())),
    }
}

/// Full `n x n` matrix algebra over `a`; `E_pq (x) a_i` sits at `(p n + q) dim a + i`.
pub fn matrix_algebra(a: &Arc<Algebra>, n: usize) -> Result<Arc<Algebra>> {
    if n == 0 {
        return Err(Error::InvalidAlgebra("matrix size must be at least 1".into()));
    }
    let field = a.field();
    let d = a.dim();
    let nn = n * n;
    let mut left = Vec::with_capacity(nn * d);
    let mut labels = Vec::with_capacity(nn * d);
    for p in 0..n {
        for q in 0..n {
            // E_pq E_rs = delta_qr E_ps
            let mut e = Mat::zeros(field, nn, nn);
            for s in 0..n {
                e.set(p * n + s, q * n + s, &field.one());
            }
            for i in 0..d {
                left.push(e.kron(a.left(i)));
                labels.push(format!("E{}{}:{}", p + 1, q + 1, a.label_of(i)));
            }
        }
    }
    let diag = |p: usize, v: &Mat| -> Mat { Mat::unit_vector(field, nn, p * n + p).kron(v) };
    let mut unit = Mat::zeros(field, nn * d, 1);
    for p in 0..n {
        unit = &unit + &diag(p, a.unit());
    }
    let idempotents = a
        .idempotents()
        .map(|ids| (0..n).flat_map(|p| ids.iter().map(move |e| diag(p, e))).collect());
    let closed_radical = Mat::identity(field, nn).kron(a.radical());
    Ok(Algebra::new_trusted(AlgebraData {
        field,
        labels,
        left,
        unit,
        idempotents,
        blocks: Vec::new(),
        closed_radical: Some(closed_radical),
        provenance: Provenance::new("matrix", Some(format!("{n}x{n} over a dim {d} algebra"))),
    }))
}

/// Direct product `a x b`, with the central idempotents (1,0), (0,1) recorded as blocks.
pub fn product(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<Arc<Algebra>> {
    let field = a.field();
    if b.field() != field {
        return Err(Error::InvalidField("factors over different fields".into()));
    }
    let (da, db) = (a.dim(), b.dim());
    let n = da + db;
    let za = Mat::zeros(field, da, da);
    let zb = Mat::zeros(field, db, db);
    let mut left = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for i in 0..da {
        left.push(Mat::block_diag(field, &[a.left(i), &zb]));
        labels.push(format!("({},0)", a.label_of(i)));
    }
    for j in 0..db {
        left.push(Mat::block_diag(field, &[&za, b.left(j)]));
        labels.push(format!("(0,{})", b.label_of(j)));
    }
    let inl = |v: &Mat| Mat::vstack(field, 1, &[v, &Mat::zeros(field, db, 1)]);
    let inr = |v: &Mat| Mat::vstack(field, 1, &[&Mat::zeros(field, da, 1), v]);
    let unit = &inl(a.unit()) + &inr(b.unit());
    let idempotents = match (a.idempotents(), b.idempotents()) {
        (Some(x), Some(y)) => Some(x.iter().map(inl).chain(y.iter().map(inr)).collect()),
        _ => None,
    };
    let blocks = vec![inl(a.unit()), inr(b.unit())];
    let closed_radical = Mat::block_diag(field, &[a.radical(), b.radical()]);
    Ok(Algebra::new_trusted(AlgebraData {
        field,
        labels,
        left,
        unit,
        idempotents,
        blocks,
        closed_radical: Some(closed_radical),
        provenance: Provenance::new("product", None),
    }))
}

/// Tensor product over the ground field; `a_i (x) b_j` sits at `i dim b + j`.
pub fn tensor(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<Arc<Algebra>> {
    let field = a.field();
    if b.field() != field {
        return Err(Error::InvalidField("factors over different fields".into()));
    }
    let (da, db) = (a.dim(), b.dim());
    let mut left = Vec::with_capacity(da * db);
    let mut labels = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            left.push(a.left(i).kron(b.left(j)));
            labels.push(format!("{}|{}", a.label_of(i), b.label_of(j)));
        }
    }
    let unit = a.unit().kron(b.unit());
    let idempotents = match (a.idempotents(), b.idempotents()) {
        (Some(x), Some(y)) => Some(x.iter().flat_map(|e| y.iter().map(move |f| e.kron(f))).collect()),
        _ => None,
    };
    // Valid when the simple modules of both factors are split, which the
    // idempotent data certifies for supported constructors.
    let closed_radical = idempotents.as_ref().map(|_| {
        let l = a.radical().kron(&Mat::identity(field, db));
        let r = Mat::identity(field, da).kron(b.radical());
        Mat::hstack(field, da * db, &[&l, &r]).column_space()
    });
    Ok(Algebra::new_trusted(AlgebraData {
        field,
        labels,
        left,
        unit,
        idempotents,
        blocks: Vec::new(),
        closed_radical,
        provenance: Provenance::new("tensor", None),
    }))
}

/// `a / I` for a two-sided ideal spanned by the columns of `ideal`.
pub fn quotient(a: &Arc<Algebra>, ideal: &Mat) -> Result<Arc<Algebra>> {
    let field = a.field();
    let n = a.dim();
    let ideal = ideal.column_space();
    for i in 0..n {
        let li = a.left(i);
        let ri = a.right_mult(&a.basis_vector(i));
        if !ideal.spans(&(li * &ideal)) || !ideal.spans(&(&ri * &ideal)) {
            return Err(Error::InvalidAlgebra("subspace is not a two-sided ideal".into()));
        }
    }
    let complement = ideal.complement_basis();
    let k = complement.cols();
    if k == 0 {
        return Err(Error::InvalidAlgebra("quotient by the whole algebra".into()));
    }
    let t = Mat::hstack(field, n, &[&ideal, &complement]);
    let tinv = t.inverse().expect("complement completes a basis");
    let proj = tinv.submatrix(ideal.cols(), k, 0, n);
    let reps: Vec<Mat> = complement.columns();
    let labels: Vec<String> = reps
        .iter()
        .map(|v| {
            let i = (0..n).find(|&i| !v.get(i, 0).is_zero()).unwrap();
            a.label_of(i).to_string()
        })
        .collect();
    let left = reps
        .iter()
        .map(|x| {
            let cols: Vec<Mat> = reps.iter().map(|y| &proj * &a.mul(x, y)).collect();
            Mat::hstack(field, k, &cols.iter().collect::<Vec<_>>())
        })
        .collect();
    Algebra::new(AlgebraData {
        field,
        labels,
        left,
        unit: &proj * a.unit(),
        idempotents: None,
        blocks: Vec::new(),
        closed_radical: None,
        provenance: Provenance::new("quotient", None),
    })
}
