//! Small finite fields as self-acting modules: the carrier is the field,
//! the acting monoid is its full multiplicative monoid (zero absorbing),
//! and the action is the field multiplication.

use hyperlab_core::{FiniteMonoid, TModule};

use crate::ResidueError;

/// Orders with builtin tables.
pub const FIELD_ORDERS: &[usize] = &[2, 3, 4, 5, 7, 8, 9];

/// prime, degree, and the digits of x^degree in the chosen reduction:
/// order 4 uses x^2+x+1, order 8 uses x^3+x+1, order 9 uses x^2+1.
fn parameters(q: usize) -> Result<(usize, usize, Vec<usize>), ResidueError> {
    match q {
        2 => Ok((2, 1, vec![])),
        3 => Ok((3, 1, vec![])),
        4 => Ok((2, 2, vec![1, 1])),
        5 => Ok((5, 1, vec![])),
        7 => Ok((7, 1, vec![])),
        8 => Ok((2, 3, vec![1, 1, 0])),
        9 => Ok((3, 2, vec![2, 0])),
        _ => Err(ResidueError::UnknownField(q)),
    }
}

/// Little-endian base-p digits of `index`, `k` of them.
fn digits(index: usize, p: usize, k: usize) -> Vec<usize> {
    let mut digits = Vec::with_capacity(k);
    let mut rest = index;
    for _ in 0..k {
        digits.push(rest % p);
        rest /= p;
    }
    digits
}

fn index(digits: &[usize], p: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn label(digits: &[usize]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (power, &c) in digits.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && power > 0 { String::new() } else { c.to_string() };
        let var = match power {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{power}"),
        };
        terms.push(format!("{coeff}{var}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Polynomial product reduced by x^k = reduction.
fn multiply(a: &[usize], b: &[usize], p: usize, k: usize, reduction: &[usize]) -> Vec<usize> {
    let mut wide = vec![0usize; 2 * k];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            wide[i + j] = (wide[i + j] + ai * bj) % p;
        }
    }
    for power in (k..2 * k).rev() {
        let c = wide[power];
        if c == 0 {
            continue;
        }
        wide[power] = 0;
        for (offset, &r) in reduction.iter().enumerate() {
            wide[power - k + offset] = (wide[power - k + offset] + c * r) % p;
        }
    }
    wide.truncate(k);
    wide
}

/// The field of order `q` as a module over its own multiplicative monoid.
pub fn field_module(q: usize) -> Result<TModule, ResidueError> {
    let (p, k, reduction) = parameters(q)?;
    let elements: Vec<Vec<usize>> = (0..q).map(|i| digits(i, p, k)).collect();
    let labels: Vec<String> = elements.iter().map(|d| label(d)).collect();

    let add: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    let sum: Vec<usize> =
                        a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect();
                    index(&sum, p)
                })
                .collect()
        })
        .collect();
    let mul: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| index(&multiply(a, b, p, k, &reduction), p))
                .collect()
        })
        .collect();

    let acting = FiniteMonoid {
        elements: labels.clone(),
        op: mul.clone(),
        identity: 1,
        absorbing: Some(0),
    };
    Ok(TModule {
        acting,
        carrier: labels,
        add,
        zero: 0,
        left_action: mul,
        right_action: None,
    })
}
