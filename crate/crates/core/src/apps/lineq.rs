use std::io::{self, BufRead, Write};

use super::Session;
use crate::error::{Error, Result};
use crate::frontend::{parse_expr, Interpreter};
use crate::linalg::{Matrix, SINGULARITY_TOLERANCE};
use crate::value::{format_float, Value};

/// Relative residual allowed on rows left out of an overdetermined solve.
const CONSISTENCY_TOLERANCE: f64 = 1e-9;

/// Gaussian elimination with partial pivoting on an augmented copy.
fn gauss(a: &[Vec<f64>], b: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = a.len();
    let k = b.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<f64>> = a.iter().zip(b).map(|(r, c)| r.iter().chain(c).copied().collect()).collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .expect("non-empty pivot range");
        if m[pivot][col].abs() <= SINGULARITY_TOLERANCE {
            return Err(Error::Singular);
        }
        m.swap(col, pivot);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            if f != 0.0 {
                let (top, rest) = m.split_at_mut(row);
                for (x, p) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= f * p;
                }
            }
        }
    }
    let mut x = vec![vec![0.0; k]; n];
    for i in (0..n).rev() {
        for c in 0..k {
            let s: f64 = (i + 1..n).map(|j| m[i][j] * x[j][c]).sum();
            x[i][c] = (m[i][n + c] - s) / m[i][i];
        }
    }
    Ok(x)
}

/// Row indices of the first `n` linearly independent rows, if there are that many.
fn independent_rows(a: &Matrix) -> Option<Vec<usize>> {
    let n = a.num_cols();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in a.rows().iter().enumerate() {
        let mut r = row.clone();
        for bvec in &basis {
            let lead = bvec.iter().position(|x| x.abs() > SINGULARITY_TOLERANCE).expect("basis rows are non-zero");
            let f = r[lead] / bvec[lead];
            r.iter_mut().zip(bvec).for_each(|(x, y)| *x -= f * y);
        }
        if r.iter().any(|x| x.abs() > SINGULARITY_TOLERANCE) {
            basis.push(r);
            chosen.push(i);
            if chosen.len() == n {
                return Some(chosen);
            }
        }
    }
    None
}

/// Solves `coeff · x = consts`. With more equations than unknowns the first
/// independent rows determine `x` and the rest must agree with it.
pub fn solve_linear(coeff: &Matrix, consts: &Matrix) -> Result<Matrix> {
    let (m, n) = (coeff.num_rows(), coeff.num_cols());
    if consts.num_rows() != m {
        return Err(Error::Dimension(format!("{m} equations but {} constant rows", consts.num_rows())));
    }
    if m < n {
        return Err(Error::Singular);
    }
    let rows = if m == n { (0..n).collect() } else { independent_rows(coeff).ok_or(Error::Singular)? };
    let a: Vec<Vec<f64>> = rows.iter().map(|&i| coeff.rows()[i].clone()).collect();
    let b: Vec<Vec<f64>> = rows.iter().map(|&i| consts.rows()[i].clone()).collect();
    let x = Matrix::new(gauss(&a, &b)?)?;
    if m > n {
        let fitted = coeff.mul(&x)?;
        for (got, want) in fitted.rows().iter().zip(consts.rows()) {
            for (g, w) in got.iter().zip(want) {
                if (g - w).abs() > CONSISTENCY_TOLERANCE * (1.0 + w.abs()) {
                    return Err(Error::Inconsistent);
                }
            }
        }
    }
    Ok(x)
}

/// Reads a matrix written as a nested list, e.g. `[[1,2],[1,1]]`.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let bad = |e: &dyn std::fmt::Display| Error::Invalid(format!("cannot read matrix: {e}"));
    let expr = parse_expr(text).map_err(|e| bad(&e))?;
    let value = Interpreter::new().eval(&expr).map_err(|e| bad(&e))?;
    let rows = match value {
        Value::Matrix(m) => return Ok(m),
        Value::List(rows) => rows,
        other => return Err(bad(&format!("expected a list of rows, got {}", other.kind()))),
    };
    let rows = rows
        .iter()
        .map(|r| match r {
            Value::List(xs) => xs.iter().map(|x| x.as_f64().ok_or_else(|| bad(&"entries must be numbers"))).collect(),
            x => x.as_f64().map(|f| vec![f]).ok_or_else(|| bad(&"rows must be lists")),
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(rows)
}

pub fn run<R: BufRead, W: Write>(s: &mut Session<R, W>) -> io::Result<()> {
    let Some(a) = s.ask("Enter the coefficient matrix -")? else { return Ok(()) };
    let Some(b) = s.ask("Enter the constant matrix -")? else { return Ok(()) };
    match parse_matrix(&a).and_then(|a| solve_linear(&a, &parse_matrix(&b)?)) {
        Ok(x) => {
            s.say("")?;
            s.say("Solution matrix -")?;
            for row in x.rows() {
                let cells: Vec<String> = row.iter().map(|&v| format_float(v)).collect();
                s.say(&cells.join(" "))?;
            }
            Ok(())
        }
        Err(e) => s.error(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn published_system() {
        let x = solve_linear(&m(&[&[1.0, 2.0], &[1.0, 1.0]]), &m(&[&[4.0], &[1.0]])).unwrap();
        assert_eq!(x.rows(), &[vec![-2.0], vec![3.0]]);
        let id = Matrix::unit(3).unwrap();
        let b = m(&[&[1.0], &[2.0], &[3.0]]);
        assert_eq!(solve_linear(&id, &b).unwrap(), b);
        assert_eq!(solve_linear(&m(&[&[1.0, 1.0], &[2.0, 2.0]]), &m(&[&[1.0], &[3.0]])), Err(Error::Singular));
    }

    #[test]
    fn overdetermined_systems() {
        let a = m(&[&[1.0, 1.0], &[2.0, 2.0], &[1.0, -1.0]]);
        let x = solve_linear(&a, &m(&[&[2.0], &[4.0], &[0.0]])).unwrap();
        assert_eq!(x.rows(), &[vec![1.0], vec![1.0]]);
        assert_eq!(solve_linear(&a, &m(&[&[2.0], &[4.0], &[1.0], ])).unwrap().num_rows(), 2);
        assert_eq!(solve_linear(&a, &m(&[&[2.0], &[5.0], &[0.0]])), Err(Error::Inconsistent));
    }

    #[test]
    fn batch_transcript() {
        let mut out = Vec::new();
        run(&mut Session::new("[[1,2],[1,1]]\n[[4],[1]]\n".as_bytes(), &mut out, true)).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.ends_with("Solution matrix -\n-2.0\n3.0\n"), "{text}");
        assert!(parse_matrix("[[1,x]]").is_err());
    }

    proptest! {
        #[test]
        fn residual_is_small(n in 1usize..=6, seed in proptest::collection::vec(-10.0f64..10.0, 42)) {
            // diagonally dominant, hence well conditioned
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { 50.0 + seed[i].abs() } else { seed[(i * n + j) % 36] }).collect())
                .collect();
            let a = Matrix::new(rows).unwrap();
            let b = Matrix::new((0..n).map(|i| vec![seed[36 + i]]).collect()).unwrap();
            let x = solve_linear(&a, &b).unwrap();
            let r = a.mul(&x).unwrap();
            for (got, want) in r.rows().iter().zip(b.rows()) {
                prop_assert!((got[0] - want[0]).abs() <= 1e-8);
            }
        }
    }
}
