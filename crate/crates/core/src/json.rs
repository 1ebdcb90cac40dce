//! JSON encodings for the file formats the CLI reads and writes.
//!
//! Rationals appear as canonical `p/q` strings, polynomials as grammar
//! strings. Field order is fixed by the DTO structs, so serialization is
//! byte-deterministic for identical inputs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebraic::{AlgebraicError, AlgebraicFunction};
use crate::corpus::CorpusCase;
use crate::mahler::{MahlerError, MahlerFunction};
use crate::parser::{parse_bipoly, parse_poly};
use crate::rat::{parse_rat, rat_to_string};
use crate::series::{Series, Valuation};
use crate::zeroorder::{Approximant, NuCertificate, RationalFunction, ZeroOrderError};

#[derive(Debug)]
pub enum JsonError {
    /// Malformed JSON, grammar, or rational literal: an input problem.
    Malformed(String),
    /// Structurally valid input that fails Mahler-equation validation.
    Mahler(MahlerError),
    /// Structurally valid input that fails branch validation.
    Algebraic(AlgebraicError),
    /// Structurally valid input that fails rational-function validation.
    ZeroOrder(ZeroOrderError),
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsonError::Malformed(msg) => write!(f, "{}", msg),
            JsonError::Mahler(e) => write!(f, "{}", e),
            JsonError::Algebraic(e) => write!(f, "{}", e),
            JsonError::ZeroOrder(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for JsonError {}

impl From<MahlerError> for JsonError {
    fn from(e: MahlerError) -> Self {
        JsonError::Mahler(e)
    }
}

impl From<AlgebraicError> for JsonError {
    fn from(e: AlgebraicError) -> Self {
        JsonError::Algebraic(e)
    }
}

impl From<ZeroOrderError> for JsonError {
    fn from(e: ZeroOrderError) -> Self {
        JsonError::ZeroOrder(e)
    }
}

fn malformed<E: fmt::Display>(context: &str, e: E) -> JsonError {
    JsonError::Malformed(format!("{}: {}", context, e))
}

#[derive(Serialize, Deserialize)]
struct SeriesDto {
    trunc_order: u64,
    coeffs: Vec<String>,
}

pub fn series_to_json(s: &Series) -> String {
    let dto = SeriesDto {
        trunc_order: s.trunc_order() as u64,
        coeffs: s.coeffs().iter().map(rat_to_string).collect(),
    };
    serde_json::to_string(&dto).unwrap()
}

pub fn series_from_json(text: &str) -> Result<Series, JsonError> {
    let dto: SeriesDto =
        serde_json::from_str(text).map_err(|e| malformed("invalid series JSON", e))?;
    if dto.coeffs.len() as u64 != dto.trunc_order + 1 {
        return Err(JsonError::Malformed(format!(
            "series JSON claims trunc_order {} but carries {} coefficients",
            dto.trunc_order,
            dto.coeffs.len()
        )));
    }
    let coeffs = dto
        .coeffs
        .iter()
        .map(|t| parse_rat(t).map_err(|e| malformed("invalid coefficient", e)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Series::new(coeffs))
}

#[derive(Serialize, Deserialize)]
struct MahlerDto {
    k: u32,
    coeffs: Vec<String>,
    seeds: Vec<String>,
    irrational: bool,
}

pub fn mahler_to_json(m: &MahlerFunction) -> String {
    let dto = MahlerDto {
        k: m.radix(),
        coeffs: m
            .coefficients()
            .iter()
            .map(|p| p.to_grammar_string('z'))
            .collect(),
        seeds: m.seeds().iter().map(rat_to_string).collect(),
        irrational: m.irrational_asserted(),
    };
    serde_json::to_string(&dto).unwrap()
}

pub fn mahler_from_json(text: &str) -> Result<MahlerFunction, JsonError> {
    let dto: MahlerDto =
        serde_json::from_str(text).map_err(|e| malformed("invalid Mahler JSON", e))?;
    mahler_from_dto(dto)
}

fn mahler_from_dto(dto: MahlerDto) -> Result<MahlerFunction, JsonError> {
    let coeffs = dto
        .coeffs
        .iter()
        .map(|t| parse_poly(t).map_err(|e| malformed("invalid coefficient polynomial", e)))
        .collect::<Result<Vec<_>, _>>()?;
    let seeds = dto
        .seeds
        .iter()
        .map(|t| parse_rat(t).map_err(|e| malformed("invalid seed", e)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MahlerFunction::new(dto.k, coeffs, seeds, dto.irrational)?)
}

#[derive(Serialize, Deserialize)]
struct AlgebraicDto {
    poly: String,
    branch0: String,
}

#[derive(Serialize, Deserialize)]
struct RationalDto {
    num: String,
    den: String,
}

pub fn algebraic_to_json(g: &AlgebraicFunction) -> String {
    let dto = AlgebraicDto {
        poly: g.annihilator().to_grammar_string('y'),
        branch0: rat_to_string(g.branch0()),
    };
    serde_json::to_string(&dto).unwrap()
}

pub fn algebraic_from_json(text: &str) -> Result<AlgebraicFunction, JsonError> {
    let dto: AlgebraicDto =
        serde_json::from_str(text).map_err(|e| malformed("invalid algebraic JSON", e))?;
    algebraic_from_dto(dto)
}

fn algebraic_from_dto(dto: AlgebraicDto) -> Result<AlgebraicFunction, JsonError> {
    let poly = parse_bipoly(&dto.poly).map_err(|e| malformed("invalid annihilator", e))?;
    let branch0 = parse_rat(&dto.branch0).map_err(|e| malformed("invalid branch value", e))?;
    Ok(AlgebraicFunction::new(poly, branch0)?)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ApproximantDto {
    Algebraic(AlgebraicDto),
    Rational(RationalDto),
}

/// Approximant files carry either {"poly", "branch0"} or {"num", "den"}.
pub fn approximant_from_json(text: &str) -> Result<Approximant, JsonError> {
    let dto: ApproximantDto =
        serde_json::from_str(text).map_err(|e| malformed("invalid approximant JSON", e))?;
    approximant_from_dto(dto)
}

fn approximant_from_dto(dto: ApproximantDto) -> Result<Approximant, JsonError> {
    match dto {
        ApproximantDto::Algebraic(a) => Ok(Approximant::Algebraic(algebraic_from_dto(a)?)),
        ApproximantDto::Rational(r) => {
            let num = parse_poly(&r.num).map_err(|e| malformed("invalid numerator", e))?;
            let den = parse_poly(&r.den).map_err(|e| malformed("invalid denominator", e))?;
            Ok(Approximant::Rational(RationalFunction::new(num, den)?))
        }
    }
}

pub fn approximant_to_json(a: &Approximant) -> String {
    match a {
        Approximant::Algebraic(g) => algebraic_to_json(g),
        Approximant::Rational(r) => serde_json::to_string(&RationalDto {
            num: r.num().to_grammar_string('z'),
            den: r.den().to_grammar_string('z'),
        })
        .unwrap(),
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum NuDto {
    Finite(u64),
    Above { above: u64 },
}

#[derive(Serialize)]
struct HypothesesDto {
    irrational_asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    q_nonzero_at_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simple_branch: Option<bool>,
    degree_bound: u64,
    log_height: u64,
    degrees_from_supplied_equation: bool,
}

#[derive(Serialize)]
struct CertificateDto {
    nu: NuDto,
    bound: u64,
    path: &'static str,
    bound_kind: &'static str,
    expansion_order: u64,
    hypotheses: HypothesesDto,
    status: &'static str,
}

pub fn certificate_to_json(c: &NuCertificate) -> String {
    let dto = CertificateDto {
        nu: match c.nu {
            Valuation::Finite(v) => NuDto::Finite(v as u64),
            Valuation::AboveTruncation(t) => NuDto::Above { above: t as u64 },
        },
        bound: c.bound,
        path: c.path.as_str(),
        bound_kind: c.bound_kind.as_str(),
        expansion_order: c.expansion_order,
        hypotheses: HypothesesDto {
            irrational_asserted: c.hypotheses.irrational_asserted,
            q_nonzero_at_zero: c.hypotheses.q_nonzero_at_zero,
            simple_branch: c.hypotheses.simple_branch,
            degree_bound: c.hypotheses.degree_bound,
            log_height: c.hypotheses.log_height,
            degrees_from_supplied_equation: c.hypotheses.degrees_from_supplied_equation,
        },
        status: c.status.as_str(),
    };
    serde_json::to_string(&dto).unwrap()
}

#[derive(Serialize, Deserialize)]
struct CorpusCaseDto {
    id: String,
    mahler: MahlerDto,
    approximant: ApproximantDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_nu: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct CorpusFileDto {
    cases: Vec<CorpusCaseDto>,
}

/// Parse a user corpus file: {"cases": [{"id", "mahler", "approximant",
/// "expected_nu"?}, ...]}. An empty case list is rejected.
pub fn corpus_from_json(text: &str) -> Result<Vec<CorpusCase>, JsonError> {
    let dto: CorpusFileDto =
        serde_json::from_str(text).map_err(|e| malformed("invalid corpus JSON", e))?;
    if dto.cases.is_empty() {
        return Err(JsonError::Malformed("no cases in corpus file".to_owned()));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut cases = Vec::with_capacity(dto.cases.len());
    for c in dto.cases {
        if !seen.insert(c.id.clone()) {
            return Err(JsonError::Malformed(format!("duplicate case id {:?}", c.id)));
        }
        cases.push(CorpusCase {
            id: c.id,
            mahler: mahler_from_dto(c.mahler)?,
            approximant: approximant_from_dto(c.approximant)?,
            expected_nu: c.expected_nu,
        });
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn series_round_trip() {
        let s = corpus::sigma2n().expand(6).unwrap();
        let text = series_to_json(&s);
        assert_eq!(
            text,
            r#"{"trunc_order":6,"coeffs":["0","1","1","0","1","0","0"]}"#
        );
        assert_eq!(series_from_json(&text).unwrap(), s);
    }

    #[test]
    fn series_length_mismatch_rejected() {
        let bad = r#"{"trunc_order":3,"coeffs":["1"]}"#;
        assert!(matches!(
            series_from_json(bad),
            Err(JsonError::Malformed(_))
        ));
    }

    #[test]
    fn mahler_round_trip() {
        let m = corpus::sigma2n();
        let text = mahler_to_json(&m);
        let back = mahler_from_json(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn approximant_shapes() {
        let alg = approximant_from_json(r#"{"poly":"y^2 - (1+z)","branch0":"1"}"#).unwrap();
        assert!(matches!(alg, Approximant::Algebraic(_)));
        let rat = approximant_from_json(r#"{"num":"1","den":"1 - z"}"#).unwrap();
        assert!(matches!(rat, Approximant::Rational(_)));
        assert!(approximant_from_json(r#"{"nope":1}"#).is_err());
    }

    #[test]
    fn certificate_fixed_field_order() {
        let m = corpus::sigma2n();
        let t2 = Approximant::Rational(RationalFunction::polynomial(
            parse_poly("z + z^2").unwrap(),
        ));
        let cert = crate::zeroorder::certified_nu(&m, &t2).unwrap();
        let text = certificate_to_json(&cert);
        assert!(text.starts_with(r#"{"nu":4,"bound":15,"path":"rational""#));
        assert!(text.ends_with(r#""status":"certified"}"#));
    }

    #[test]
    fn semantic_errors_are_distinguished() {
        let bad_branch = algebraic_from_json(r#"{"poly":"y^2 - (1+z)","branch0":"2"}"#);
        assert!(matches!(bad_branch, Err(JsonError::Algebraic(_))));
        let bad_seeds =
            mahler_from_json(r#"{"k":2,"coeffs":["z","-1-z","1"],"seeds":["0"],"irrational":true}"#);
        assert!(matches!(bad_seeds, Err(JsonError::Mahler(_))));
        let bad_grammar =
            mahler_from_json(r#"{"k":2,"coeffs":["2z"],"seeds":["0"],"irrational":true}"#);
        assert!(matches!(bad_grammar, Err(JsonError::Malformed(_))));
    }
}
