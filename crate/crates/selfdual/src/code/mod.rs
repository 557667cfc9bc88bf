//! Self-dual code construction, certified minimum distance and partial
//! weight spectra, weight-enumerator classification, and the extremal
//! distance bounds.
//!
//! Codes come from generator matrices [Iₙ | σ(v)]; the construction is
//! accepted exactly when σ(v)σ(v)ᵀ = Iₙ. Both coordinate halves are then
//! information sets (σ(v)ᵀ is the inverse of σ(v)), and any codeword of
//! weight w restricts to weight ≤ ⌊w/2⌋ on at least one half, so enumerating
//! all messages of weight ≤ m on both halves certifies that every unseen
//! codeword has weight ≥ 2(m+1).

mod enumerate;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gf2::{BitMatrix, BitWord};
use crate::group::GroupRingElement;
use enumerate::{level_min_image_weight, level_weight_counts, messages_up_to};

/// Default cap on enumerated messages per spectrum computation. A length-72
/// cutoff-16 spectrum needs ~8.2e7; this leaves generous headroom while
/// refusing accidental combinatorial explosions.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 2_000_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("self-duality criterion fails with {violations} violating entries")]
    NotSelfDual { violations: usize },
    #[error("cutoff {cutoff} exceeds code length {length}")]
    CutoffTooLarge { cutoff: usize, length: usize },
    #[error("enumeration budget exceeded: needs {required} messages, budget {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error("spectrum not certified far enough: needs cutoff {needed}, have {have}")]
    InsufficientCutoff { needed: usize, have: usize },
    #[error("length {length} has no enumerator form data; only type classification available")]
    NoFormForLength { length: usize },
    #[error("counts inconsistent with every known form: {details}")]
    UnclassifiableCounts { details: String },
    #[error("extremal bound undefined: {0}")]
    BadBoundQuery(String),
}

/// Singly even (Type I) or doubly even (Type II).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeType {
    TypeI,
    TypeII,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::TypeI => "I",
            CodeType::TypeII => "II",
        })
    }
}

/// The parameterized weight-enumerator forms of lengths 68 and 72.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    W68_1,
    W68_2,
    W72_1,
    W72_2,
    TypeII72,
}

impl Form {
    pub fn as_str(&self) -> &'static str {
        match self {
            Form::W68_1 => "W68_1",
            Form::W68_2 => "W68_2",
            Form::W72_1 => "W72_1",
            Form::W72_2 => "W72_2",
            Form::TypeII72 => "TypeII72",
        }
    }

    pub fn parse(s: &str) -> Option<Form> {
        Some(match s {
            "W68_1" => Form::W68_1,
            "W68_2" => Form::W68_2,
            "W72_1" => Form::W72_1,
            "W72_2" => Form::W72_2,
            "TypeII72" => Form::TypeII72,
            _ => return None,
        })
    }

    pub fn length(&self) -> usize {
        match self {
            Form::W68_1 | Form::W68_2 => 68,
            _ => 72,
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A form together with its solved parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormParams {
    W68_1 { beta: i64 },
    W68_2 { gamma: i64, beta: i64 },
    W72_1 { gamma: i64, beta: i64 },
    W72_2 { gamma: i64, beta: i64 },
    TypeII72 { alpha: i64 },
}

impl FormParams {
    pub fn form(&self) -> Form {
        match self {
            FormParams::W68_1 { .. } => Form::W68_1,
            FormParams::W68_2 { .. } => Form::W68_2,
            FormParams::W72_1 { .. } => Form::W72_1,
            FormParams::W72_2 { .. } => Form::W72_2,
            FormParams::TypeII72 { .. } => Form::TypeII72,
        }
    }

    pub fn gamma(&self) -> Option<i64> {
        match *self {
            FormParams::W68_2 { gamma, .. }
            | FormParams::W72_1 { gamma, .. }
            | FormParams::W72_2 { gamma, .. } => Some(gamma),
            _ => None,
        }
    }

    /// β for the Type I forms, α for Type II.
    pub fn value(&self) -> i64 {
        match *self {
            FormParams::W68_1 { beta }
            | FormParams::W68_2 { beta, .. }
            | FormParams::W72_1 { beta, .. }
            | FormParams::W72_2 { beta, .. } => beta,
            FormParams::TypeII72 { alpha } => alpha,
        }
    }

    /// The low-order coefficients (A₁₂, A₁₄, A₁₆) this parameter point
    /// predicts.
    pub fn predicted_counts(&self) -> (i64, i64, i64) {
        match *self {
            FormParams::W68_1 { beta } => (442 + 4 * beta, 10864 - 8 * beta, 0),
            FormParams::W68_2 { gamma, beta } => {
                (442 + 4 * beta, 14960 - 8 * beta - 256 * gamma, 0)
            }
            FormParams::W72_1 { gamma, beta } => {
                (2 * beta, 8640 - 64 * gamma, 124281 - 24 * beta + 384 * gamma)
            }
            FormParams::W72_2 { gamma, beta } => {
                (2 * beta, 7616 - 64 * gamma, 134521 - 24 * beta + 384 * gamma)
            }
            FormParams::TypeII72 { alpha } => (4398 + alpha, 0, 197073 - 12 * alpha),
        }
    }
}

impl fmt::Display for FormParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FormParams::W68_1 { beta } => write!(f, "W68_1 beta={beta}"),
            FormParams::W68_2 { gamma, beta } => write!(f, "W68_2 gamma={gamma} beta={beta}"),
            FormParams::W72_1 { gamma, beta } => write!(f, "W72_1 gamma={gamma} beta={beta}"),
            FormParams::W72_2 { gamma, beta } => write!(f, "W72_2 gamma={gamma} beta={beta}"),
            FormParams::TypeII72 { alpha } => write!(f, "TypeII72 alpha={alpha}"),
        }
    }
}

/// Result of classifying a code: its type, minimum distance, and — for
/// lengths 68 and 72 — the solved enumerator form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumeratorClass {
    pub code_type: CodeType,
    pub d: usize,
    pub form: Option<FormParams>,
}

impl fmt::Display for EnumeratorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            Some(p) => write!(f, "Type {} d={} {}", self.code_type, self.d, p),
            None => write!(f, "Type {} d={}", self.code_type, self.d),
        }
    }
}

/// Exact codeword counts A_w for every weight w ≤ cutoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialWeightSpectrum {
    counts: BTreeMap<usize, u64>,
    cutoff: usize,
    certified: bool,
}

impl PartialWeightSpectrum {
    pub fn count(&self, w: usize) -> u64 {
        assert!(w <= self.cutoff, "weight {w} beyond certified cutoff");
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Nonzero (weight, count) pairs, ascending by weight.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&w, &c)| (w, c))
    }

    /// Smallest nonzero codeword weight within the cutoff, if any appeared.
    pub fn min_positive_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }
}

/// Certificate accompanying an exact minimum distance: both information sets
/// were exhausted through message weight `enumerated_level`, so any codeword
/// not seen has weight ≥ `certified_floor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub enumerated_level: usize,
    pub certified_floor: usize,
    pub messages: u64,
}

/// Outcome of a (possibly target-bounded) minimum-distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceBound {
    /// The exact minimum distance with its certificate.
    Exact {
        d: usize,
        certificate: DistanceCertificate,
    },
    /// Early abort: a codeword of weight `witness` < target was found, so
    /// d ≤ witness < target. Only produced when a target is supplied.
    BelowTarget { witness: usize, messages: u64 },
}

impl DistanceBound {
    /// The distance value: exact, or the witness upper bound.
    pub fn value(&self) -> usize {
        match *self {
            DistanceBound::Exact { d, .. } => d,
            DistanceBound::BelowTarget { witness, .. } => witness,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DistanceBound::Exact { .. })
    }
}

/// A verified self-dual code of length 2n generated by [Iₙ | σ(v)].
#[derive(Clone, PartialEq, Eq)]
pub struct SelfDualCode {
    v: GroupRingElement,
    sigma: BitMatrix,
    gen: BitMatrix,
}

impl fmt::Debug for SelfDualCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SelfDualCode([{}, {}] over {})",
            self.length(),
            self.dimension(),
            self.group_id()
        )
    }
}

/// Count the entries where m·mᵀ differs from the identity, over the diagonal
/// and upper triangle only (the product is symmetric). Zero exactly when the
/// self-duality criterion holds.
pub fn self_dual_violations(m: &BitMatrix) -> usize {
    assert!(m.is_square(), "criterion applies to square matrices");
    let n = m.nrows();
    let mut violations = 0;
    for i in 0..n {
        if m.row(i).weight() % 2 == 0 {
            violations += 1; // diagonal entry is 0, must be 1
        }
        for j in i + 1..n {
            if m.row(i).dot(m.row(j)) {
                violations += 1;
            }
        }
    }
    violations
}

impl SelfDualCode {
    /// Accepts v exactly when σ(v)σ(v)ᵀ = Iₙ; the rejection carries the
    /// violation count used as the search penalty.
    pub fn build(v: GroupRingElement) -> Result<Self, CodeError> {
        let sigma = v.sigma();
        let violations = self_dual_violations(&sigma);
        if violations > 0 {
            return Err(CodeError::NotSelfDual { violations });
        }
        let n = sigma.nrows();
        let gen = BitMatrix::identity(n).hstack(&sigma).unwrap();
        Ok(SelfDualCode { v, sigma, gen })
    }

    pub fn dimension(&self) -> usize {
        self.sigma.nrows()
    }

    pub fn length(&self) -> usize {
        2 * self.dimension()
    }

    pub fn group_id(&self) -> &str {
        self.v.group().id()
    }

    pub fn v(&self) -> &GroupRingElement {
        &self.v
    }

    pub fn sigma(&self) -> &BitMatrix {
        &self.sigma
    }

    /// The generator matrix [Iₙ | σ(v)].
    pub fn generator(&self) -> &BitMatrix {
        &self.gen
    }

    /// True when every generator row weight is divisible by four; for a
    /// self-orthogonal code this forces every codeword weight to be.
    pub fn is_doubly_even(&self) -> bool {
        self.gen.rows().iter().all(|r| r.weight() % 4 == 0)
    }

    pub fn code_type(&self) -> CodeType {
        if self.is_doubly_even() {
            CodeType::TypeII
        } else {
            CodeType::TypeI
        }
    }

    /// Exact minimum distance by two-information-set enumeration. With a
    /// `target`, returns a one-sided `BelowTarget` as soon as a completed
    /// enumeration level has witnessed a codeword lighter than the target;
    /// aborting only at level boundaries keeps the answer independent of
    /// thread scheduling.
    pub fn min_distance(&self, target: Option<usize>) -> DistanceBound {
        let n = self.dimension();
        let sigma_t = self.sigma.transpose();
        let left = self.sigma.rows();
        let right = sigma_t.rows();
        let mut best = usize::MAX;
        let mut messages = 0u64;
        for level in 1..=n {
            let a = level_min_image_weight(left, level);
            let b = level_min_image_weight(right, level);
            messages += 2 * enumerate::binomial(n, level);
            best = best.min(a.saturating_add(level)).min(b.saturating_add(level));
            let floor = 2 * (level + 1);
            if best <= floor {
                return DistanceBound::Exact {
                    d: best,
                    certificate: DistanceCertificate {
                        enumerated_level: level,
                        certified_floor: floor,
                        messages,
                    },
                };
            }
            if let Some(t) = target {
                if best < t {
                    return DistanceBound::BelowTarget {
                        witness: best,
                        messages,
                    };
                }
            }
        }
        // Both sets fully enumerated: best is exact.
        DistanceBound::Exact {
            d: best,
            certificate: DistanceCertificate {
                enumerated_level: n,
                certified_floor: 2 * (n + 1),
                messages,
            },
        }
    }

    /// Convenience wrapper: the exact minimum distance.
    pub fn distance(&self) -> usize {
        self.min_distance(None).value()
    }

    /// Exact codeword counts for every weight ≤ cutoff, with the default
    /// enumeration budget.
    pub fn partial_spectrum(&self, cutoff: usize) -> Result<PartialWeightSpectrum, CodeError> {
        self.partial_spectrum_with_budget(cutoff, DEFAULT_ENUMERATION_BUDGET)
    }

    /// Pass 1 enumerates messages of weight ≤ ⌊cutoff/2⌋ on the left
    /// information set and counts every codeword of total weight ≤ cutoff;
    /// pass 2 does the same on the right set but keeps only codewords whose
    /// left restriction weighs more than ⌊cutoff/2⌋. Every light codeword is
    /// light on one side, so the union is exhaustive and duplicate-free.
    pub fn partial_spectrum_with_budget(
        &self,
        cutoff: usize,
        budget: u64,
    ) -> Result<PartialWeightSpectrum, CodeError> {
        let n = self.dimension();
        if cutoff > 2 * n {
            return Err(CodeError::CutoffTooLarge {
                cutoff,
                length: 2 * n,
            });
        }
        let half = cutoff / 2;
        let required = 2 * messages_up_to(n, half);
        if required > budget {
            return Err(CodeError::BudgetExceeded { required, budget });
        }
        let sigma_t = self.sigma.transpose();
        let mut totals = vec![0u64; cutoff + 1];
        for level in 0..=half.min(n) {
            for (rows, filter) in [
                (self.sigma.rows(), None),
                (sigma_t.rows(), Some(half)),
            ] {
                let counts = level_weight_counts(rows, level, cutoff, filter);
                for (t, c) in totals.iter_mut().zip(counts) {
                    *t += c;
                }
            }
        }
        let counts = totals
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(w, c)| (w, c))
            .collect();
        Ok(PartialWeightSpectrum {
            counts,
            cutoff,
            certified: true,
        })
    }
}

/// The upper bound on the minimum distance of a self-dual code of the given
/// length: 4⌊len/24⌋+4, except Type I lengths ≡ 22 (mod 24) where it is
/// 4⌊len/24⌋+6. Type II requires length ≡ 0 (mod 8).
pub fn extremal_bound(length: usize, code_type: CodeType) -> Result<usize, CodeError> {
    if length == 0 || length % 2 != 0 {
        return Err(CodeError::BadBoundQuery(format!(
            "length {length} is not a positive even integer"
        )));
    }
    match code_type {
        CodeType::TypeII => {
            if length % 8 != 0 {
                return Err(CodeError::BadBoundQuery(format!(
                    "Type II requires length divisible by 8, got {length}"
                )));
            }
            Ok(4 * (length / 24) + 4)
        }
        CodeType::TypeI => {
            if length % 24 == 22 {
                Ok(4 * (length / 24) + 6)
            } else {
                Ok(4 * (length / 24) + 4)
            }
        }
    }
}

/// Solve (form, parameters) from low-order counts.
///
/// Length 68: β = (A₁₂−442)/4; the form is W68_1 when A₁₄ = 10864−8β,
/// otherwise W68_2 with γ = (14960−8β−A₁₄)/256 and 0 ≤ γ ≤ 9.
/// Length 72 Type I: β = A₁₂/2 and γ candidates come from both A₁₄ readings;
/// when both are admissible (they differ by 16) A₁₆ disambiguates.
/// Length 72 Type II: α = A₁₂ − 4398.
pub fn solve_form(
    length: usize,
    code_type: CodeType,
    a12: u64,
    a14: u64,
    a16: Option<u64>,
) -> Result<FormParams, CodeError> {
    let a12 = a12 as i64;
    let a14 = a14 as i64;
    let fail = |details: String| CodeError::UnclassifiableCounts { details };
    match (length, code_type) {
        (68, CodeType::TypeI) => {
            if (a12 - 442) % 4 != 0 {
                return Err(fail(format!("A12={a12} gives non-integer beta")));
            }
            let beta = (a12 - 442) / 4;
            if a14 == 10864 - 8 * beta {
                return Ok(FormParams::W68_1 { beta });
            }
            let rem = 14960 - 8 * beta - a14;
            if rem % 256 != 0 {
                return Err(fail(format!("A12={a12} A14={a14} fit no length-68 form")));
            }
            let gamma = rem / 256;
            if !(0..=9).contains(&gamma) {
                return Err(fail(format!(
                    "A12={a12} A14={a14} give gamma={gamma} outside 0..=9"
                )));
            }
            Ok(FormParams::W68_2 { gamma, beta })
        }
        (68, CodeType::TypeII) => Err(fail("length 68 admits no Type II code".into())),
        (72, CodeType::TypeII) => {
            if a14 != 0 {
                return Err(fail(format!("Type II code with nonzero A14={a14}")));
            }
            let alpha = a12 - 4398;
            if let Some(a16) = a16 {
                if a16 as i64 != 197073 - 12 * alpha {
                    return Err(fail(format!(
                        "A16={a16} conflicts with alpha={alpha} from A12"
                    )));
                }
            }
            Ok(FormParams::TypeII72 { alpha })
        }
        (72, CodeType::TypeI) => {
            if a12 % 2 != 0 {
                return Err(fail(format!("A12={a12} gives non-integer beta")));
            }
            let beta = a12 / 2;
            if (8640 - a14) % 64 != 0 {
                return Err(fail(format!("A14={a14} gives non-integer gamma")));
            }
            let gamma1 = (8640 - a14) / 64;
            let gamma2 = gamma1 - 16; // = (7616 - a14)/64
            if gamma1 < 0 {
                return Err(fail(format!("A14={a14} gives negative gamma")));
            }
            if gamma2 < 0 {
                return Ok(FormParams::W72_1 { gamma: gamma1, beta });
            }
            // Both readings admissible; A₁₆ decides.
            let a16 = a16.ok_or(CodeError::InsufficientCutoff {
                needed: 16,
                have: 14,
            })? as i64;
            let w1 = FormParams::W72_1 { gamma: gamma1, beta };
            let w2 = FormParams::W72_2 { gamma: gamma2, beta };
            if a16 == w1.predicted_counts().2 {
                Ok(w1)
            } else if a16 == w2.predicted_counts().2 {
                Ok(w2)
            } else {
                Err(fail(format!(
                    "A16={a16} matches neither length-72 Type I form (beta={beta}, gamma {gamma1} or {gamma2})"
                )))
            }
        }
        _ => Err(CodeError::NoFormForLength { length }),
    }
}

/// Classify a code from an already-computed spectrum. The spectrum must be
/// certified to cutoff 14 (lengths 68 and 72); ambiguous length-72 Type I
/// splits additionally need A₁₆ and surface as `InsufficientCutoff` until the
/// caller supplies a cutoff-16 spectrum.
pub fn classify(
    code: &SelfDualCode,
    spectrum: &PartialWeightSpectrum,
) -> Result<EnumeratorClass, CodeError> {
    let length = code.length();
    let code_type = code.code_type();
    // Consistency: self-dual codes have even weights only; doubly even codes
    // have no weights ≢ 0 (mod 4).
    for (w, c) in spectrum.nonzero() {
        if w % 2 != 0 && c > 0 {
            return Err(CodeError::UnclassifiableCounts {
                details: format!("odd weight {w} has count {c}"),
            });
        }
        if code_type == CodeType::TypeII && w % 4 != 0 && c > 0 {
            return Err(CodeError::UnclassifiableCounts {
                details: format!("doubly even code with weight {w} count {c}"),
            });
        }
    }
    let d = spectrum
        .min_positive_weight()
        .ok_or(CodeError::InsufficientCutoff {
            needed: spectrum.cutoff() + 2,
            have: spectrum.cutoff(),
        })?;
    if length != 68 && length != 72 {
        return Ok(EnumeratorClass {
            code_type,
            d,
            form: None,
        });
    }
    if spectrum.cutoff() < 14 {
        return Err(CodeError::InsufficientCutoff {
            needed: 14,
            have: spectrum.cutoff(),
        });
    }
    let a16 = if spectrum.cutoff() >= 16 {
        Some(spectrum.count(16))
    } else {
        None
    };
    let form = solve_form(length, code_type, spectrum.count(12), spectrum.count(14), a16)?;
    Ok(EnumeratorClass {
        code_type,
        d,
        form: Some(form),
    })
}

/// Full classification pipeline: computes whatever spectrum the length
/// needs, widening to cutoff 16 when the length-72 Type I split is
/// ambiguous. For lengths without form data this only needs the distance.
pub fn classify_code(code: &SelfDualCode) -> Result<EnumeratorClass, CodeError> {
    let length = code.length();
    if length != 68 && length != 72 {
        let d = code.distance();
        return Ok(EnumeratorClass {
            code_type: code.code_type(),
            d,
            form: None,
        });
    }
    let spectrum = code.partial_spectrum(14)?;
    match classify(code, &spectrum) {
        Err(CodeError::InsufficientCutoff { needed, .. }) => {
            let wider = code.partial_spectrum(needed)?;
            classify(code, &wider)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn code_over_cyclic(n: usize, bits: &str) -> Result<SelfDualCode, CodeError> {
        let g = FiniteGroup::cyclic(n).unwrap();
        SelfDualCode::build(GroupRingElement::new(g, BitWord::from_bit_str(bits)).unwrap())
    }

    #[test]
    fn violations_examples() {
        assert_eq!(self_dual_violations(&BitMatrix::identity(5)), 0);
        assert_eq!(self_dual_violations(&BitMatrix::zeros(4, 4)), 4);
        let c = crate::gf2::circ(&BitWord::from_bit_str("110")).unwrap();
        assert_eq!(self_dual_violations(&c), 6);
    }

    #[test]
    fn smallest_self_dual_code() {
        let code = code_over_cyclic(2, "10").unwrap();
        assert_eq!(code.length(), 4);
        assert_eq!(code.distance(), 2);
        let spec = code.partial_spectrum(4).unwrap();
        assert_eq!(spec.count(0), 1);
        assert_eq!(spec.count(2), 2);
        assert_eq!(spec.count(4), 1);
    }

    #[test]
    fn rejection_carries_violation_count() {
        match code_over_cyclic(3, "110") {
            Err(CodeError::NotSelfDual { violations }) => assert_eq!(violations, 6),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn extended_hamming_parameters() {
        // over C4, v = (0,1,1,1): the [8,4,4] Type II code
        let code = code_over_cyclic(4, "0111").unwrap();
        assert_eq!(code.distance(), 4);
        assert_eq!(code.code_type(), CodeType::TypeII);
        let spec = code.partial_spectrum(8).unwrap();
        let got: Vec<(usize, u64)> = spec.nonzero().collect();
        assert_eq!(got, vec![(0, 1), (4, 14), (8, 1)]);
    }

    #[test]
    fn spectrum_cutoff_and_budget_errors() {
        let code = code_over_cyclic(4, "0111").unwrap();
        assert!(matches!(
            code.partial_spectrum(9),
            Err(CodeError::CutoffTooLarge { .. })
        ));
        assert!(matches!(
            code.partial_spectrum_with_budget(8, 3),
            Err(CodeError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn spectrum_is_pass_order_invariant() {
        // Replacing sigma by its transpose swaps the roles of the two
        // information sets (the codes differ only by swapping halves, which
        // preserves weights), so the counts must agree.
        for (n, bits) in [(4, "0111"), (7, "1000000"), (5, "00100")] {
            let code = code_over_cyclic(n, bits).unwrap();
            let mirrored = SelfDualCode {
                v: code.v.clone(),
                sigma: code.sigma.transpose(),
                gen: BitMatrix::identity(code.dimension())
                    .hstack(&code.sigma.transpose())
                    .unwrap(),
            };
            let spec = code.partial_spectrum(2 * n).unwrap();
            let spec2 = mirrored.partial_spectrum(2 * n).unwrap();
            assert_eq!(
                spec.nonzero().collect::<Vec<_>>(),
                spec2.nonzero().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn distance_early_abort() {
        let code = code_over_cyclic(2, "10").unwrap();
        match code.min_distance(Some(4)) {
            DistanceBound::BelowTarget { witness, .. } => assert_eq!(witness, 2),
            other => panic!("expected early abort, got {other:?}"),
        }
        assert!(code.min_distance(Some(2)).is_exact());
    }

    #[test]
    fn extremal_bound_examples() {
        assert_eq!(extremal_bound(68, CodeType::TypeI).unwrap(), 12);
        assert_eq!(extremal_bound(46, CodeType::TypeI).unwrap(), 10);
        assert_eq!(extremal_bound(72, CodeType::TypeII).unwrap(), 16);
        assert!(extremal_bound(68, CodeType::TypeII).is_err());
        assert!(extremal_bound(7, CodeType::TypeI).is_err());
    }

    #[test]
    fn classify_table_style_counts() {
        let p = solve_form(68, CodeType::TypeI, 578, 14688, None).unwrap();
        assert_eq!(p, FormParams::W68_2 { gamma: 0, beta: 34 });

        // gamma below 16: no ambiguity, no A16 required
        let p = solve_form(72, CodeType::TypeI, 402, 8640, None).unwrap();
        assert_eq!(p, FormParams::W72_1 { gamma: 0, beta: 201 });

        // ambiguous split resolved by A16
        let w1 = FormParams::W72_1 { gamma: 72, beta: 825 };
        let (a12, a14, a16) = w1.predicted_counts();
        assert_eq!(
            solve_form(72, CodeType::TypeI, a12 as u64, a14 as u64, None),
            Err(CodeError::InsufficientCutoff { needed: 16, have: 14 })
        );
        assert_eq!(
            solve_form(72, CodeType::TypeI, a12 as u64, a14 as u64, Some(a16 as u64)).unwrap(),
            w1
        );
        let w2 = FormParams::W72_2 { gamma: 56, beta: 825 };
        let (b12, b14, b16) = w2.predicted_counts();
        assert_eq!((a12, a14), (b12, b14));
        assert_eq!(
            solve_form(72, CodeType::TypeI, b12 as u64, b14 as u64, Some(b16 as u64)).unwrap(),
            w2
        );

        let p = solve_form(72, CodeType::TypeII, 1626, 0, None).unwrap();
        assert_eq!(p, FormParams::TypeII72 { alpha: -2772 });
    }

    #[test]
    fn classify_rejects_inconsistent_counts() {
        assert!(solve_form(68, CodeType::TypeI, 579, 14688, None).is_err());
        assert!(solve_form(68, CodeType::TypeI, 578, 14689, None).is_err());
        // gamma would be 12: outside both W68 readings
        let a14 = 14960 - 8 * 34 - 256 * 12;
        assert!(solve_form(68, CodeType::TypeI, 578, a14 as u64, None).is_err());
        assert!(solve_form(40, CodeType::TypeI, 1, 2, None).is_err());
    }

    #[test]
    fn form_round_trip_spot() {
        for p in [
            FormParams::W68_1 { beta: 104 },
            FormParams::W68_2 { gamma: 4, beta: 77 },
            FormParams::W72_1 { gamma: 14, beta: 300 },
            FormParams::W72_1 { gamma: 36, beta: 441 },
            FormParams::W72_2 { gamma: 22, beta: 500 },
            FormParams::TypeII72 { alpha: -3744 },
        ] {
            let (a12, a14, a16) = p.predicted_counts();
            let ty = match p {
                FormParams::TypeII72 { .. } => CodeType::TypeII,
                _ => CodeType::TypeI,
            };
            let got = solve_form(p.form().length(), ty, a12 as u64, a14 as u64, Some(a16 as u64))
                .unwrap();
            assert_eq!(got, p);
        }
    }
}
