use crate::error::{Error, Result};

use super::TOLERANCE;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Vector(Vec<f64>);

impl From<Vec<f64>> for Vector {
    fn from(v: Vec<f64>) -> Self {
        Vector(v)
    }
}

impl Vector {
    pub fn new(components: Vec<f64>) -> Self {
        Vector(components)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn to_list(&self) -> Vec<f64> {
        self.0.clone()
    }

    fn same_dim(&self, other: &Vector, op: &str) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension(format!("{op} of vectors of dimension {} and {}", self.dim(), other.dim())));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Vector, op: &str, f: impl Fn(f64, f64) -> f64) -> Result<Vector> {
        self.same_dim(other, op)?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| f(*a, *b)).collect()))
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.zip_with(other, "addition", |a, b| a + b)
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.zip_with(other, "subtraction", |a, b| a - b)
    }

    pub fn scale(&self, k: f64) -> Vector {
        self.map(|x| k * x)
    }

    pub fn map(&self, f: impl FnMut(f64) -> f64) -> Vector {
        Vector(self.0.iter().copied().map(f).collect())
    }

    /// 0-based component.
    pub fn extract(&self, i: usize) -> Result<f64> {
        self.0.get(i).copied().ok_or(Error::IndexOutOfRange { index: i, len: self.dim() })
    }

    /// Components `i..=j`, 0-based.
    pub fn extract_range(&self, i: usize, j: usize) -> Result<Vector> {
        if j >= self.dim() {
            return Err(Error::IndexOutOfRange { index: j, len: self.dim() });
        }
        if i > j {
            return Err(Error::Invalid(format!("empty range {i}..={j}")));
        }
        Ok(Vector(self.0[i..=j].to_vec()))
    }

    pub fn inner(&self, other: &Vector) -> Result<f64> {
        self.same_dim(other, "inner product")?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    fn check_three(&self) -> Result<()> {
        if self.dim() != 3 {
            return Err(Error::Dimension(format!("cross product needs 3-vectors, got dimension {}", self.dim())));
        }
        Ok(())
    }

    pub fn cross(&self, other: &Vector) -> Result<Vector> {
        self.check_three()?;
        other.check_three()?;
        let (a, b) = (&self.0, &other.0);
        Ok(Vector(vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]))
    }

    pub fn magnitude(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn nonzero_magnitude(&self) -> Result<f64> {
        let m = self.magnitude();
        if m == 0.0 {
            return Err(Error::Invalid("vector has zero magnitude".into()));
        }
        Ok(m)
    }

    /// Unit vector in the same direction.
    pub fn normalize(&self) -> Result<Vector> {
        let m = self.nonzero_magnitude()?;
        Ok(self.scale(1.0 / m))
    }

    /// Angle in radians. The cosine is clamped into `[-1, 1]` first.
    pub fn angle(&self, other: &Vector) -> Result<f64> {
        let dot = self.inner(other)?;
        let cos = dot / (self.nonzero_magnitude()? * other.nonzero_magnitude()?);
        Ok(cos.clamp(-1.0, 1.0).acos())
    }

    pub fn is_null(&self) -> bool {
        self.0.iter().all(|&x| x == 0.0)
    }

    pub fn is_orthogonal_to(&self, other: &Vector) -> Result<bool> {
        Ok(self.inner(other)?.abs() <= TOLERANCE)
    }
}

pub fn add_many(vs: &[Vector]) -> Result<Vector> {
    fold(vs, Vector::add)
}

pub fn sub_many(vs: &[Vector]) -> Result<Vector> {
    fold(vs, Vector::sub)
}

fn fold(vs: &[Vector], f: impl Fn(&Vector, &Vector) -> Result<Vector>) -> Result<Vector> {
    let (first, rest) = vs.split_first().ok_or(Error::EmptyFold)?;
    rest.iter().try_fold(first.clone(), |acc, v| f(&acc, v))
}

/// `a · (b × c)`.
pub fn scalar_triple(a: &Vector, b: &Vector, c: &Vector) -> Result<f64> {
    a.check_three()?;
    a.inner(&b.cross(c)?)
}

/// `a × (b × c)`.
pub fn vector_triple(a: &Vector, b: &Vector, c: &Vector) -> Result<Vector> {
    a.cross(&b.cross(c)?)
}
