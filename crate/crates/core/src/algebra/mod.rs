//! Finite-dimensional associative unital algebras given by structure constants.

mod derived;
mod group;
mod idempotent;
mod poly;
mod quiver;
mod radical;

use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat, Scalar};
use crate::modrep::Structural;

pub use derived::{matrix_algebra, product, quotient, tensor, truncated_extension, Truncated};
pub use group::{cyclic_group_table, group_algebra, symmetric_group_table};
pub use quiver::{linear_quiver, path_algebra, Arrow, Quiver, Relation, DEFAULT_MAX_PATH_LENGTH};
pub use radical::generic_radical;

/// Records which constructor produced an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub constructor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Provenance {
    pub fn new(constructor: &str, detail: Option<String>) -> Self {
        Provenance {
            constructor: constructor.to_string(),
            detail,
        }
    }

    pub fn explicit() -> Self {
        Provenance::new("explicit", None)
    }
}

/// A finite-dimensional algebra. Basis element `i` acts on coordinates by
/// left multiplication `left[i]`, whose column `j` holds `e_i * e_j`.
pub struct Algebra {
    field: FieldSpec,
    labels: Vec<String>,
    left: Vec<Mat>,
    unit: Mat,
    idempotents: Option<Vec<Mat>>,
    blocks: Vec<Mat>,
    closed_radical: Option<Mat>,
    provenance: Provenance,
    generators: Vec<usize>,
    radical: OnceLock<Mat>,
    opposite: OnceLock<Arc<Algebra>>,
    opposite_of: OnceLock<Weak<Algebra>>,
    structural: OnceLock<Result<Arc<Structural>>>,
}

/// Raw data for [`Algebra::new`].
pub struct AlgebraData {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub left: Vec<Mat>,
    pub unit: Mat,
    pub idempotents: Option<Vec<Mat>>,
    pub blocks: Vec<Mat>,
    pub closed_radical: Option<Mat>,
    pub provenance: Provenance,
}

impl AlgebraData {
    /// Builds left multiplication matrices from `table[i][j]` = coordinates of `e_i e_j`.
    pub fn from_table(field: FieldSpec, labels: Vec<String>, table: &[Vec<Mat>], unit: Mat) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidAlgebra(format!("structure table must be {n}x{n}")));
        }
        let mut left = Vec::with_capacity(n);
        for row in table {
            for v in row {
                if v.rows() != n || v.cols() != 1 {
                    return Err(Error::InvalidAlgebra(format!("product vectors must have length {n}")));
                }
            }
            let refs: Vec<&Mat> = row.iter().collect();
            left.push(Mat::hstack(field, n, &refs));
        }
        Ok(AlgebraData {
            field,
            labels,
            left,
            unit,
            idempotents: None,
            blocks: Vec::new(),
            closed_radical: None,
            provenance: Provenance::explicit(),
        })
    }
}

impl Algebra {
    /// Validates associativity, the unit law and any supplied idempotents.
    pub fn new(data: AlgebraData) -> Result<Arc<Self>> {
        let a = Algebra::assemble(data)?;
        a.validate()?;
        Ok(Arc::new(a))
    }

    /// For constructors whose output is correct by construction; validation
    /// still runs in debug builds.
    pub(crate) fn new_trusted(data: AlgebraData) -> Arc<Self> {
        let a = Algebra::assemble(data).expect("constructor produced consistent shapes");
        #[cfg(debug_assertions)]
        a.validate().expect("constructor produced a valid algebra");
        Arc::new(a)
    }

    fn assemble(data: AlgebraData) -> Result<Self> {
        let n = data.labels.len();
        let field = data.field;
        if data.left.len() != n
            || data
                .left
                .iter()
                .any(|m| m.rows() != n || m.cols() != n || m.field() != field)
        {
            return Err(Error::InvalidAlgebra(
                "multiplication matrices have the wrong shape".into(),
            ));
        }
        if data.unit.rows() != n || data.unit.cols() != 1 {
            return Err(Error::InvalidAlgebra("unit vector has the wrong length".into()));
        }
        let mut a = Algebra {
            field,
            labels: data.labels,
            left: data.left,
            unit: data.unit,
            idempotents: data.idempotents,
            blocks: data.blocks,
            closed_radical: data.closed_radical,
            provenance: data.provenance,
            generators: Vec::new(),
            radical: OnceLock::new(),
            opposite: OnceLock::new(),
            opposite_of: OnceLock::new(),
            structural: OnceLock::new(),
        };
        a.generators = a.compute_generators();
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let id = Mat::identity(self.field, n);
        if self.left_mult(&self.unit) != id {
            return Err(Error::InvalidAlgebra(
                "unit does not act as the identity from the left".into(),
            ));
        }
        for i in 0..n {
            if &self.left[i] * &self.unit != self.basis_vector(i) {
                return Err(Error::InvalidAlgebra(format!(
                    "unit is not a right identity for `{}`",
                    self.labels[i]
                )));
            }
        }
        // Left multiplication is a homomorphism on generators, hence everywhere.
        for &g in &self.generators {
            for j in 0..n {
                let prod = self.left[g].column(j);
                if &self.left[g] * &self.left[j] != self.left_mult(&prod) {
                    return Err(Error::InvalidAlgebra(format!(
                        "associativity fails for ({} * {}) * -",
                        self.labels[g], self.labels[j]
                    )));
                }
            }
        }
        if self.generated_span().rank() != n {
            return Err(Error::InvalidAlgebra("basis is not reached from the unit".into()));
        }
        if let Some(ids) = &self.idempotents {
            check_idempotent_set(self, ids, "idempotents")?;
        }
        if !self.blocks.is_empty() {
            check_idempotent_set(self, &self.blocks, "block idempotents")?;
        }
        if let Some(r) = &self.closed_radical {
            if r.rows() != n {
                return Err(Error::InvalidAlgebra("radical basis has the wrong length".into()));
            }
        }
        Ok(())
    }

    fn compute_generators(&self) -> Vec<usize> {
        let n = self.dim();
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for i in 0..n {
            if span.rank() == n {
                break;
            }
            let v = self.basis_vector(i);
            if !span.spans(&v) {
                gens.push(i);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Span of all left-nested words in `gens` applied to the unit.
    fn closure(&self, gens: &[usize]) -> Mat {
        let n = self.dim();
        let mut basis = self.unit.column_space();
        loop {
            let mut parts = vec![basis.clone()];
            for &g in gens {
                parts.push(&self.left[g] * &basis);
            }
            let refs: Vec<&Mat> = parts.iter().collect();
            let next = Mat::hstack(self.field, n, &refs).column_space();
            if next.cols() == basis.cols() {
                return basis;
            }
            basis = next;
        }
    }

    fn generated_span(&self) -> Mat {
        self.closure(&self.generators)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Left multiplication matrix of basis element `i`.
    pub fn left(&self, i: usize) -> &Mat {
        &self.left[i]
    }

    pub fn left_all(&self) -> &[Mat] {
        &self.left
    }

    /// Basis indices generating the algebra together with the unit.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Mat {
        Mat::unit_vector(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Mat {
        Mat::zeros(self.field, self.dim(), 1)
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_mult(&self, x: &Mat) -> Mat {
        let coeffs: Vec<Scalar> = (0..self.dim()).map(|i| x.get(i, 0)).collect();
        let refs: Vec<&Mat> = self.left.iter().collect();
        Mat::linear_combination(self.field, self.dim(), self.dim(), &coeffs, &refs)
    }

    /// Right multiplication by an arbitrary element: column `i` holds `e_i * x`.
    pub fn right_mult(&self, x: &Mat) -> Mat {
        let n = self.dim();
        let cols: Vec<Mat> = (0..n).map(|i| &self.left[i] * x).collect();
        let refs: Vec<&Mat> = cols.iter().collect();
        Mat::hstack(self.field, n, &refs)
    }

    pub fn mul(&self, x: &Mat, y: &Mat) -> Mat {
        &self.left_mult(x) * y
    }

    /// Coordinates of `e_i * e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Mat {
        self.left[i].column(j)
    }

    /// Complete set of primitive orthogonal idempotents, when known.
    pub fn idempotents(&self) -> Option<&[Mat]> {
        self.idempotents.as_deref()
    }

    /// Central block idempotents recorded by the product constructor.
    pub fn block_idempotents(&self) -> &[Mat] {
        &self.blocks
    }

    /// Radical basis known from the constructor, if any.
    pub fn closed_form_radical(&self) -> Option<&Mat> {
        self.closed_radical.as_ref()
    }

    /// Columns span the Jacobson radical.
    pub fn radical(&self) -> &Mat {
        self.radical.get_or_init(|| match &self.closed_radical {
            Some(r) => r.column_space(),
            None => generic_radical(self),
        })
    }

    pub fn radical_dim(&self) -> usize {
        self.radical().cols()
    }

    /// Products `x * y` for `x` in `a` and `y` in `b`, spanned as columns.
    pub fn span_products(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.dim();
        let mut parts = Vec::new();
        for i in 0..a.cols() {
            parts.push(&self.left_mult(&a.column(i)) * b);
        }
        let refs: Vec<&Mat> = parts.iter().collect();
        Mat::hstack(self.field, n, &refs).column_space()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.left[i].column(j) == self.left[j].column(i)))
    }

    /// The opposite algebra, memoized so that taking it twice returns `self`.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.opposite_of.get().and_then(Weak::upgrade) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let op = derived::opposite_data(self);
                let op = Algebra::assemble(op).expect("opposite shapes");
                let _ = op.opposite_of.set(Arc::downgrade(self));
                Arc::new(op)
            })
            .clone()
    }

    pub(crate) fn structural_cache(&self) -> &OnceLock<Result<Arc<Structural>>> {
        &self.structural
    }

    /// Pointer identity first, structure constants second.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(self, other) || self.structurally_equal(other)
    }

    pub fn structurally_equal(&self, other: &Algebra) -> bool {
        self.field == other.field && self.left == other.left && self.unit == other.unit
    }

    /// Coordinates of an element given as (label, scalar) pairs.
    pub fn element(&self, terms: &[(&str, i64)]) -> Result<Mat> {
        let mut v = self.zero_vector();
        for (label, c) in terms {
            let i = self
                .labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::InvalidAlgebra(format!("no basis element `{label}`")))?;
            let cur = v.get(i, 0);
            v.set(i, 0, &(&cur + &self.field.from_i64(*c)));
        }
        Ok(v)
    }

    pub fn label_of(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub(crate) fn with_idempotents(data: AlgebraData, idempotents: Vec<Mat>) -> AlgebraData {
        AlgebraData {
            idempotents: Some(idempotents),
            ..data
        }
    }

    /// The raw data of this algebra, for derived constructions and serialization.
    pub fn data(&self) -> AlgebraData {
        AlgebraData {
            field: self.field,
            labels: self.labels.clone(),
            left: self.left.clone(),
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            blocks: self.blocks.clone(),
            closed_radical: self.closed_radical.clone(),
            provenance: self.provenance.clone(),
        }
    }
}

fn check_idempotent_set(a: &Algebra, ids: &[Mat], what: &str) -> Result<()> {
    let n = a.dim();
    let mut sum = a.zero_vector();
    for (i, e) in ids.iter().enumerate() {
        if e.rows() != n || e.cols() != 1 {
            return Err(Error::InvalidAlgebra(format!(
                "{what}: vector {i} has the wrong length"
            )));
        }
        if e.is_zero() {
            return Err(Error::InvalidAlgebra(format!("{what}: vector {i} is zero")));
        }
        for (j, f) in ids.iter().enumerate() {
            let p = a.mul(e, f);
            let expected = if i == j { e.clone() } else { a.zero_vector() };
            if p != expected {
                return Err(Error::InvalidAlgebra(format!(
                    "{what}: vectors {i} and {j} are not orthogonal idempotents"
                )));
            }
        }
        sum = &sum + e;
    }
    if sum != a.unit {
        return Err(Error::InvalidAlgebra(format!("{what} do not sum to the unit")));
    }
    Ok(())
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(dim {} over {}, {})",
            self.dim(),
            self.field,
            self.provenance.constructor
        )
    }
}

/// `a` with primitive idempotents attached, split off over F_p when none were supplied.
pub fn with_primitive_idempotents(a: &Arc<Algebra>) -> Result<Arc<Algebra>> {
    if a.idempotents().is_some() || a.field().is_rational() {
        return Ok(a.clone());
    }
    let ids = idempotent::primitive_idempotents(a, 0)?;
    Ok(Algebra::new_trusted(Algebra::with_idempotents(a.data(), ids)))
}

/// The ground field as a one-dimensional algebra.
pub fn field_algebra(field: FieldSpec) -> Arc<Algebra> {
    let one = Mat::identity(field, 1);
    Algebra::new_trusted(AlgebraData {
        field,
        labels: vec!["1".into()],
        left: vec![one.clone()],
        unit: one.clone(),
        idempotents: Some(vec![one]),
        blocks: Vec::new(),
        closed_radical: Some(Mat::zeros(field, 1, 0)),
        provenance: Provenance::new("field", None),
    })
}

#[cfg(test)]
mod tests;
