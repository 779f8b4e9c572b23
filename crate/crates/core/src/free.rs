use serde::{Deserialize, Serialize};

use crate::error::check_index;
use crate::{CoreError, Elem, TModule};

/// Cap on enumerated coefficient vectors when certifying a free base.
const FREE_ENUM_CAP: usize = 1 << 20;

/// Certified free-base codec: every carrier element corresponds to exactly
/// one coefficient vector over `T + {zero}` (one slot per base element,
/// `None` is the zero coefficient).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeCodec {
    pub base: Vec<Elem>,
    /// `encode[b]` is the unique coefficient vector of carrier element `b`.
    pub encode: Vec<Vec<Option<Elem>>>,
}

impl FreeCodec {
    pub fn rank(&self) -> usize {
        self.base.len()
    }

    /// Evaluates a coefficient vector back into the module.
    pub fn decode(&self, m: &TModule, coeffs: &[Option<Elem>]) -> Elem {
        evaluate(m, &self.base, coeffs)
    }
}

fn evaluate(m: &TModule, base: &[Elem], coeffs: &[Option<Elem>]) -> Elem {
    let mut acc = m.zero;
    for (i, c) in coeffs.iter().enumerate() {
        if let Some(a) = c {
            acc = m.add(acc, m.act(*a, base[i]));
        }
    }
    acc
}

/// Certifies `base` as a free base of `m` by enumerating every coefficient
/// vector and checking the evaluation is a bijection onto the carrier.
pub fn free_codec(m: &TModule, base: &[Elem]) -> Result<FreeCodec, CoreError> {
    m.validate_shape()?;
    for &b in base {
        check_index(b, m.len())?;
    }
    let t = m.acting.len();
    let k = base.len();
    let total = (t + 1).checked_pow(k as u32).filter(|&x| x <= FREE_ENUM_CAP);
    let total = total.ok_or_else(|| {
        CoreError::Precondition(format!(
            "free-base certification over {k} slots exceeds the enumeration cap"
        ))
    })?;
    if total != m.len() {
        return Err(CoreError::NotFree(format!(
            "{total} coefficient vectors vs {} carrier elements",
            m.len()
        )));
    }

    let mut encode: Vec<Option<Vec<Option<Elem>>>> = vec![None; m.len()];
    let mut coeffs: Vec<Option<Elem>> = vec![None; k];
    for mut idx in 0..total {
        for slot in coeffs.iter_mut() {
            let digit = idx % (t + 1);
            idx /= t + 1;
            *slot = if digit == 0 { None } else { Some(digit - 1) };
        }
        let value = evaluate(m, base, &coeffs);
        if let Some(prev) = &encode[value] {
            return Err(CoreError::NotFree(format!(
                "element {} has two representations {:?} and {:?}",
                m.label(value),
                prev,
                coeffs
            )));
        }
        encode[value] = Some(coeffs.clone());
    }
    let encode = encode
        .into_iter()
        .enumerate()
        .map(|(b, v)| {
            v.ok_or_else(|| CoreError::NotFree(format!("element {} unreachable", m.label(b))))
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(FreeCodec {
        base: base.to_vec(),
        encode,
    })
}
