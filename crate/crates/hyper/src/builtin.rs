//! Builtin example hypermagmas, each with its documented validity range.
//!
//! Index 0 is always the designated zero. Families whose formulas are
//! invariant under relabeling the nonzero elements carry a canonical
//! multiplication (the cyclic group on the nonzero carrier, zero absorbing);
//! the order-dependent chains carry none.

use std::fmt;

use crate::hypermagma::{Hypermagma, MulStructure};
use crate::subset::{self, Mask};
use crate::{HyperError, MAX_CARRIER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// Signs {0,1,-1}: 1+(-1) is everything, like signs of real sums.
    Sign,
    /// Two elements with 1+1 = {0,1}.
    Krasner,
    /// Chain -inf < 1 < .. < k; a+a is the down-set of a, else the max.
    TropicalChain(usize),
    /// Every sum is the whole carrier (n elements).
    AllSum(usize),
    /// Every sum is the empty set (n elements).
    EmptySum(usize),
    /// a+b = {a,b} (n elements).
    PairSum(usize),
    /// Nonzero s+s = {0,s}, distinct nonzero sums are everything.
    MassA(usize),
    /// Nonzero s+s = H minus {s}, distinct nonzero s+s' = {s,s'}.
    MassB(usize),
    /// Nonzero s+s' = H minus {s,s'} (diagonal: H minus {s}).
    MassC(usize),
    /// Nonzero s+s = {s}, distinct nonzero sums are everything.
    /// Uniquely negated only in the degenerate case n = 3.
    Idem(usize),
    /// Chain with zero minimal: nonzero s+s = H, nonzero s+s' = {max}.
    OrderedBipotent(usize),
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Sign => write!(f, "sign"),
            Builtin::Krasner => write!(f, "krasner"),
            Builtin::TropicalChain(k) => write!(f, "tropical_chain({k})"),
            Builtin::AllSum(n) => write!(f, "all_sum({n})"),
            Builtin::EmptySum(n) => write!(f, "empty_sum({n})"),
            Builtin::PairSum(n) => write!(f, "pair_sum({n})"),
            Builtin::MassA(n) => write!(f, "mass_a({n})"),
            Builtin::MassB(n) => write!(f, "mass_b({n})"),
            Builtin::MassC(n) => write!(f, "mass_c({n})"),
            Builtin::Idem(n) => write!(f, "idem({n})"),
            Builtin::OrderedBipotent(k) => write!(f, "ordered_bipotent({k})"),
        }
    }
}

pub const KNOWN_BUILTINS: &[&str] = &[
    "sign",
    "krasner",
    "tropical_chain(k)",
    "all_sum(n)",
    "empty_sum(n)",
    "pair_sum(n)",
    "mass_a(n)",
    "mass_b(n)",
    "mass_c(n)",
    "idem(n)",
    "ordered_bipotent(k)",
];

impl Builtin {
    /// Parses `name` or `name(k)`.
    pub fn parse(spec: &str) -> Result<Builtin, HyperError> {
        let spec = spec.trim();
        let (name, param) = match spec.split_once('(') {
            None => (spec, None),
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| HyperError::UnknownBuiltin(spec.into()))?;
                let value: usize = inner.trim().parse().map_err(|_| HyperError::ParamRange {
                    name: name.into(),
                    reason: format!("`{inner}` is not a number"),
                })?;
                (name, Some(value))
            }
        };
        let need = |name: &str| -> Result<usize, HyperError> {
            param.ok_or_else(|| HyperError::ParamRange {
                name: name.into(),
                reason: "missing size parameter".into(),
            })
        };
        match name {
            "sign" => Ok(Builtin::Sign),
            "krasner" => Ok(Builtin::Krasner),
            "tropical_chain" => Ok(Builtin::TropicalChain(need(name)?)),
            "all_sum" => Ok(Builtin::AllSum(need(name)?)),
            "empty_sum" => Ok(Builtin::EmptySum(need(name)?)),
            "pair_sum" => Ok(Builtin::PairSum(need(name)?)),
            "mass_a" => Ok(Builtin::MassA(need(name)?)),
            "mass_b" => Ok(Builtin::MassB(need(name)?)),
            "mass_c" => Ok(Builtin::MassC(need(name)?)),
            "idem" => Ok(Builtin::Idem(need(name)?)),
            "ordered_bipotent" => Ok(Builtin::OrderedBipotent(need(name)?)),
            _ => Err(HyperError::UnknownBuiltin(spec.into())),
        }
    }

    pub fn build(&self) -> Result<Hypermagma, HyperError> {
        match *self {
            Builtin::Sign => Ok(sign()),
            Builtin::Krasner => Ok(krasner()),
            Builtin::TropicalChain(k) => tropical_chain(k),
            Builtin::AllSum(n) => family("all_sum", n, 2, |_, _, full| full),
            Builtin::EmptySum(n) => family("empty_sum", n, 2, |_, _, _| 0),
            Builtin::PairSum(n) => family("pair_sum", n, 2, |a, b, _| {
                subset::singleton(a) | subset::singleton(b)
            }),
            Builtin::MassA(n) => zero_neutral_family("mass_a", n, 2, |a, b, full| {
                if a == b {
                    subset::singleton(0) | subset::singleton(a)
                } else {
                    full
                }
            }),
            Builtin::MassB(n) => zero_neutral_family("mass_b", n, 3, |a, b, full| {
                if a == b {
                    full & !subset::singleton(a)
                } else {
                    subset::singleton(a) | subset::singleton(b)
                }
            }),
            Builtin::MassC(n) => zero_neutral_family("mass_c", n, 4, |a, b, full| {
                full & !subset::singleton(a) & !subset::singleton(b)
            }),
            Builtin::Idem(n) => zero_neutral_family("idem", n, 2, |a, b, full| {
                if a == b {
                    subset::singleton(a)
                } else {
                    full
                }
            }),
            Builtin::OrderedBipotent(k) => ordered_bipotent(k),
        }
    }
}

/// Parses and builds in one step, e.g. `builtin("mass_b(4)")`.
pub fn builtin(spec: &str) -> Result<Hypermagma, HyperError> {
    Builtin::parse(spec)?.build()
}

/// Cyclic group of order `n - 1` on the nonzero elements, zero absorbing.
fn cyclic_mul(n: usize) -> MulStructure {
    let mut table = vec![vec![0; n]; n];
    for i in 1..n {
        for j in 1..n {
            table[i][j] = 1 + ((i - 1) + (j - 1)) % (n - 1);
        }
    }
    MulStructure { table, one: 1 }
}

fn numbered_carrier(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i == 0 { "0".into() } else { format!("s{i}") })
        .collect()
}

fn check_size(name: &str, n: usize, min: usize) -> Result<(), HyperError> {
    if n < min {
        return Err(HyperError::ParamRange {
            name: name.into(),
            reason: format!("needs at least {min} elements, got {n}"),
        });
    }
    if n > MAX_CARRIER {
        return Err(HyperError::TooLarge(n));
    }
    Ok(())
}

/// A family whose sum formula applies to all arguments, zero included.
fn family(
    name: &str,
    n: usize,
    min: usize,
    rule: impl Fn(usize, usize, Mask) -> Mask,
) -> Result<Hypermagma, HyperError> {
    check_size(name, n, min)?;
    let full = subset::full(n);
    let hyperop = (0..n)
        .map(|a| (0..n).map(|b| rule(a, b, full)).collect())
        .collect();
    Ok(Hypermagma {
        carrier: numbered_carrier(n),
        hyperop,
        hyperzero: Some(0),
        mul: Some(cyclic_mul(n)),
    })
}

/// A family whose sum formula applies to nonzero arguments; the zero is
/// genuinely neutral.
fn zero_neutral_family(
    name: &str,
    n: usize,
    min: usize,
    rule: impl Fn(usize, usize, Mask) -> Mask,
) -> Result<Hypermagma, HyperError> {
    family(name, n, min, |a, b, full| {
        if a == 0 {
            subset::singleton(b)
        } else if b == 0 {
            subset::singleton(a)
        } else {
            rule(a, b, full)
        }
    })
}

fn sign() -> Hypermagma {
    let carrier: Vec<String> = ["0", "1", "-1"].iter().map(|s| s.to_string()).collect();
    let all = subset::full(3);
    let hyperop = vec![
        vec![subset::singleton(0), subset::singleton(1), subset::singleton(2)],
        vec![subset::singleton(1), subset::singleton(1), all],
        vec![subset::singleton(2), all, subset::singleton(2)],
    ];
    let mul = MulStructure {
        table: vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]],
        one: 1,
    };
    Hypermagma {
        carrier,
        hyperop,
        hyperzero: Some(0),
        mul: Some(mul),
    }
}

fn krasner() -> Hypermagma {
    let carrier: Vec<String> = ["0", "1"].iter().map(|s| s.to_string()).collect();
    let hyperop = vec![
        vec![subset::singleton(0), subset::singleton(1)],
        vec![subset::singleton(1), subset::full(2)],
    ];
    let mul = MulStructure {
        table: vec![vec![0, 0], vec![0, 1]],
        one: 1,
    };
    Hypermagma {
        carrier,
        hyperop,
        hyperzero: Some(0),
        mul: Some(mul),
    }
}

fn tropical_chain(k: usize) -> Result<Hypermagma, HyperError> {
    let n = k + 1;
    check_size("tropical_chain", n, 2)?;
    let carrier: Vec<String> = (0..n)
        .map(|i| if i == 0 { "-inf".into() } else { format!("{i}") })
        .collect();
    let hyperop = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if a == b {
                        subset::full(a + 1)
                    } else {
                        subset::singleton(a.max(b))
                    }
                })
                .collect()
        })
        .collect();
    Ok(Hypermagma {
        carrier,
        hyperop,
        hyperzero: Some(0),
        mul: None,
    })
}

fn ordered_bipotent(k: usize) -> Result<Hypermagma, HyperError> {
    let n = k + 1;
    check_size("ordered_bipotent", n, 2)?;
    let full = subset::full(n);
    let hyperop = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if a == 0 {
                        subset::singleton(b)
                    } else if b == 0 {
                        subset::singleton(a)
                    } else if a == b {
                        full
                    } else {
                        subset::singleton(a.max(b))
                    }
                })
                .collect()
        })
        .collect();
    Ok(Hypermagma {
        carrier: numbered_carrier(n),
        hyperop,
        hyperzero: Some(0),
        mul: None,
    })
}
