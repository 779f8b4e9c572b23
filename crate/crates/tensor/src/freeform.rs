use hyperlab_core::report::LawScan;
use hyperlab_core::{free_codec, Elem, FreeCodec, Report, TModule, Verdict};

use crate::closure::CongruenceClosure;
use crate::term::{TensorTerm, TERM_ENUM_CAP};
use crate::TensorError;

/// Normal forms for the tensor of two free modules: every class is a unique
/// coefficient matrix over the base pairs, computed without building the
/// congruence closure.
#[derive(Debug, Clone)]
pub struct TensorCodec {
    pub m1: TModule,
    pub m2: TModule,
    pub codec1: FreeCodec,
    pub codec2: FreeCodec,
    /// Acting pair `(a, a')` with `x a + x a' = 0` and `a y + a' y = 0`
    /// everywhere; it lets a zero coordinate annihilate its whole summand.
    pub scalar_pair: (Elem, Elem),
}

impl TensorCodec {
    pub fn rank(&self) -> usize {
        self.codec1.rank() * self.codec2.rank()
    }

    /// Coefficient matrix of a term, row-major over (base1, base2) slots.
    ///
    /// Sliding the right factor's coefficients back across the middle turns
    /// the term into one module-1 element per right base slot; encoding
    /// those gives the matrix. The sum over summands happens inside module
    /// 1, so the result is additive in the term by construction.
    pub fn encode(&self, t: &TensorTerm) -> Vec<Option<Elem>> {
        let r2 = self.codec2.rank();
        let mut columns = vec![self.m1.zero; r2];
        for &(v, w) in t.summands() {
            for (j, coeff) in self.codec2.encode[w].iter().enumerate() {
                if let Some(c) = coeff {
                    columns[j] = self.m1.add(columns[j], self.m1.act_right(v, *c));
                }
            }
        }
        let r1 = self.codec1.rank();
        let mut matrix = vec![None; r1 * r2];
        for (j, &u) in columns.iter().enumerate() {
            for (i, coeff) in self.codec1.encode[u].iter().enumerate() {
                matrix[i * r2 + j] = *coeff;
            }
        }
        matrix
    }

    /// Canonical term of a coefficient matrix: one summand per nonzero
    /// entry, `(a . base1[i], base2[j])`, or the zero pair for the empty
    /// matrix.
    pub fn decode(&self, matrix: &[Option<Elem>]) -> TensorTerm {
        let r2 = self.codec2.rank();
        let summands: Vec<(Elem, Elem)> = matrix
            .iter()
            .enumerate()
            .filter_map(|(cell, coeff)| {
                coeff.map(|a| {
                    let (i, j) = (cell / r2, cell % r2);
                    (self.m1.act(a, self.codec1.base[i]), self.codec2.base[j])
                })
            })
            .collect();
        if summands.is_empty() {
            TensorTerm::simple(self.m1.zero, self.m2.zero)
        } else {
            TensorTerm::new(summands).expect("nonempty by construction")
        }
    }
}

fn scalar_pair(m1: &TModule, m2: &TModule) -> Option<(Elem, Elem)> {
    let t = m1.acting.len();
    (0..t)
        .flat_map(|a| (0..t).map(move |a2| (a, a2)))
        .find(|&(a, a2)| {
            (0..m1.len()).all(|x| m1.add(m1.act_right(x, a), m1.act_right(x, a2)) == m1.zero)
                && (0..m2.len()).all(|y| m2.add(m2.act(a, y), m2.act(a2, y)) == m2.zero)
        })
}

/// Certifies unique normal forms for the tensor of two free modules.
///
/// Needs certified free bases on both sides plus a scalar pair `(a, a')`
/// that annihilates on both: without it, a zero coordinate cannot be erased
/// and base-supported forms are not unique. Soundness over the tensor
/// congruence reduces to the generator rules because encoding is additive
/// in the term; those are checked here exhaustively, along with the
/// decode-encode round trip over every coefficient matrix.
pub fn free_normal_form(
    m1: &TModule,
    base1: &[Elem],
    m2: &TModule,
    base2: &[Elem],
) -> Result<TensorCodec, TensorError> {
    if m1.acting != m2.acting {
        return Err(TensorError::Precondition(
            "both modules must act over the tensoring monoid".into(),
        ));
    }
    let codec1 = free_codec(m1, base1)?;
    let codec2 = free_codec(m2, base2)?;
    let Some(pair) = scalar_pair(m1, m2) else {
        return Err(TensorError::Precondition(
            "no acting pair sums to zero on both sides; free normal forms need one".into(),
        ));
    };
    let codec = TensorCodec {
        m1: m1.clone(),
        m2: m2.clone(),
        codec1,
        codec2,
        scalar_pair: pair,
    };

    let rules = crate::closure::module_rules(m1, m2, &m1.acting, false)?;
    for (lhs, rhs) in &rules {
        if codec.encode(lhs) != codec.encode(rhs) {
            return Err(TensorError::Inconsistent(format!(
                "normal form splits the generator {} ~ {}",
                lhs.render(m1, m2),
                rhs.render(m1, m2)
            )));
        }
    }

    let t = m1.acting.len();
    let matrices = (t + 1)
        .checked_pow(codec.rank() as u32)
        .filter(|&x| x <= TERM_ENUM_CAP)
        .ok_or_else(|| {
            TensorError::Cap(format!(
                "round-trip certification over {} slots exceeds the cap",
                codec.rank()
            ))
        })?;
    let mut matrix: Vec<Option<Elem>> = vec![None; codec.rank()];
    for mut idx in 0..matrices {
        for slot in matrix.iter_mut() {
            let digit = idx % (t + 1);
            idx /= t + 1;
            *slot = if digit == 0 { None } else { Some(digit - 1) };
        }
        let round = codec.encode(&codec.decode(&matrix));
        if round != matrix {
            return Err(TensorError::Inconsistent(format!(
                "matrix {matrix:?} does not survive the decode-encode round trip"
            )));
        }
    }
    Ok(codec)
}

/// Compares the codec's normal-form partition with the closure's classes on
/// every enumerated term: same class exactly when same matrix. On a
/// saturated closure both directions are laws; an unsaturated closure may
/// merge less than the congruence, so the comparison is left undetermined.
pub fn codec_closure_agreement(
    codec: &TensorCodec,
    closure: &CongruenceClosure,
) -> Result<Report, TensorError> {
    if codec.m1 != closure.m1 || codec.m2 != closure.m2 {
        return Err(TensorError::Precondition(
            "codec and closure must describe the same tensor".into(),
        ));
    }
    let mut report = Report::new("free normal forms vs bounded closure");
    if !closure.saturated {
        report.push(
            "codec-partition-matches-closure",
            Verdict::Undetermined { bound: closure.bound },
        );
        return Ok(report);
    }
    let mut matrix_of_class: Vec<Option<Vec<Option<Elem>>>> = vec![None; closure.class_count()];
    let mut scan = LawScan::new();
    for (i, term) in closure.terms.iter().enumerate() {
        let c = closure.class_of_term[i];
        let matrix = codec.encode(term);
        match &matrix_of_class[c] {
            None => matrix_of_class[c] = Some(matrix),
            Some(prev) => {
                if *prev != matrix {
                    scan.violation(|| {
                        format!("class {c} carries two matrices at {}",
                            term.render(&closure.m1, &closure.m2))
                    });
                }
            }
        }
    }
    report.push("codec-constant-on-classes", scan.verdict());

    let mut seen: Vec<(Vec<Option<Elem>>, usize)> = matrix_of_class
        .into_iter()
        .enumerate()
        .map(|(c, m)| (m.expect("every class has a representative"), c))
        .collect();
    seen.sort();
    let mut inject = LawScan::new();
    for w in seen.windows(2) {
        if w[0].0 == w[1].0 {
            inject.violation(|| {
                format!("classes {} and {} share a matrix", w[0].1, w[1].1)
            });
        }
    }
    report.push("codec-separates-classes", inject.verdict());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperlab_core::fixtures::{boolean_module, scalars_mod3, zmod_module};

    #[test]
    fn scalar_pair_exists_for_cyclic_fixtures() {
        // Acting indices 0 and 1 are the units 1 and 2 of F3x, and
        // x + 2x = 0 for every x in F3.
        assert_eq!(scalar_pair(&scalars_mod3(), &scalars_mod3()), Some((0, 1)));
        // Over the trivial monoid the only candidate is (1, 1): x + x = 0.
        assert_eq!(scalar_pair(&zmod_module(2), &zmod_module(2)), Some((0, 0)));
    }

    #[test]
    fn idempotent_addition_has_no_scalar_pair() {
        let b = boolean_module();
        assert_eq!(scalar_pair(&b, &b), None);
        assert!(matches!(
            free_normal_form(&b, &[1], &b, &[1]),
            Err(TensorError::Precondition(_))
        ));
    }

    #[test]
    fn mixed_annihilation_is_rejected() {
        // Z/2 has x + x = 0 but the boolean side keeps y + y = y, so no
        // shared pair exists even though the left side alone has one.
        let z = zmod_module(2);
        let b = boolean_module();
        assert_eq!(scalar_pair(&z, &b), None);
    }
}
