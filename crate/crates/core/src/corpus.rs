//! Built-in corpus: Mahler equations, algebraic approximants, and the
//! curated case list used by the corpus runner and the test suite.
//!
//! Every equation here was checked against an independent series oracle
//! (direct summation or product expansion) before being frozen, and the
//! expected valuations come from those oracles, not from this crate.

use crate::algebraic::AlgebraicFunction;
use crate::mahler::MahlerFunction;
use crate::parser::{parse_bipoly, parse_poly};
use crate::rat::parse_rat;
use crate::zeroorder::{Approximant, RationalFunction};

/// One regression case: a Mahler function against an approximant, with
/// the oracle-derived valuation when one is known.
#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub id: String,
    pub mahler: MahlerFunction,
    pub approximant: Approximant,
    pub expected_nu: Option<u64>,
}

fn mahler(k: u32, coeffs: &[&str], seeds: &[&str], irrational: bool) -> MahlerFunction {
    MahlerFunction::new(
        k,
        coeffs.iter().map(|t| parse_poly(t).unwrap()).collect(),
        seeds.iter().map(|t| parse_rat(t).unwrap()).collect(),
        irrational,
    )
    .unwrap()
}

fn algebraic(poly: &str, branch0: &str) -> AlgebraicFunction {
    AlgebraicFunction::new(parse_bipoly(poly).unwrap(), parse_rat(branch0).unwrap()).unwrap()
}

/// F = sum z^{2^n}: homogenization of F(z^2) = F(z) - z.
pub fn sigma2n() -> MahlerFunction {
    mahler(2, &["z", "-1-z", "1"], &["0", "1", "1", "0"], true)
}

/// A Stern-shaped degree-2 equation: F = (1+z+z^2)F(z^2) - zF(z^4).
pub fn stern() -> MahlerFunction {
    mahler(2, &["1", "-1-z-z^2", "z"], &["1"], true)
}

/// F = prod (1 + z^{3^n}), the indicator of ternary digits {0, 1}:
/// F = (1+z)F(z^3).
pub fn cantor3() -> MahlerFunction {
    mahler(3, &["-1", "1+z"], &["1"], true)
}

/// F = prod (1 - z^{2^n}), coefficients (-1)^{s_2(n)}: F = (1-z)F(z^2).
pub fn tmprod() -> MahlerFunction {
    mahler(2, &["1", "z-1"], &["1"], true)
}

/// F = 1/(1-z) via F = (1+z+z^2+z^3)F(z^4), with irrationality asserted
/// erroneously: the negative control for the violation path. Not part of
/// the certified case list.
pub fn geometric() -> MahlerFunction {
    mahler(4, &["-1", "1+z+z^2+z^3"], &["1"], true)
}

/// Irrationality-asserted entries paired in [`builtin_cases`].
pub fn builtin_mahler() -> Vec<(&'static str, MahlerFunction)> {
    vec![
        ("cantor3", cantor3()),
        ("sigma2n", sigma2n()),
        ("stern", stern()),
        ("tmprod", tmprod()),
    ]
}

pub fn builtin_algebraic() -> Vec<(&'static str, AlgebraicFunction)> {
    vec![
        ("cubic", algebraic("y^3 - y - z", "0")),
        ("parab", algebraic("y^2 + 2*y - z", "0")),
        ("sqrt1pz", algebraic("y^2 - (1+z)", "1")),
        ("sqrt1pz3", algebraic("y^2 - (1+z)^3", "1")),
    ]
}

/// Truncations of sum z^{2^n} at degrees 2, 4, 8.
pub fn truncation_polynomials() -> Vec<(&'static str, RationalFunction)> {
    vec![
        ("trunc2", RationalFunction::polynomial(parse_poly("z + z^2").unwrap())),
        (
            "trunc4",
            RationalFunction::polynomial(parse_poly("z + z^2 + z^4").unwrap()),
        ),
        (
            "trunc8",
            RationalFunction::polynomial(parse_poly("z + z^2 + z^4 + z^8").unwrap()),
        ),
    ]
}

/// The shipped case list, sorted by id. All cases certify; the expected
/// valuations were derived by expanding both sides with independent
/// oracles.
pub fn builtin_cases() -> Vec<CorpusCase> {
    // (mahler id, algebraic id, oracle nu)
    let algebraic_expected: &[(&str, &str, u64)] = &[
        ("sigma2n", "sqrt1pz", 0),
        ("sigma2n", "parab", 1),
        ("sigma2n", "cubic", 1),
        ("sigma2n", "sqrt1pz3", 0),
        ("stern", "sqrt1pz", 1),
        ("stern", "parab", 0),
        ("stern", "cubic", 0),
        ("stern", "sqrt1pz3", 1),
        ("cantor3", "sqrt1pz", 1),
        ("cantor3", "parab", 0),
        ("cantor3", "cubic", 0),
        ("cantor3", "sqrt1pz3", 1),
        ("tmprod", "sqrt1pz", 1),
        ("tmprod", "parab", 0),
        ("tmprod", "cubic", 0),
        ("tmprod", "sqrt1pz3", 1),
    ];
    let mahlers = builtin_mahler();
    let algebraics = builtin_algebraic();
    let find_m = |id: &str| {
        mahlers
            .iter()
            .find(|(mid, _)| *mid == id)
            .map(|(_, m)| m.clone())
            .unwrap()
    };
    let find_g = |id: &str| {
        algebraics
            .iter()
            .find(|(gid, _)| *gid == id)
            .map(|(_, g)| g.clone())
            .unwrap()
    };

    let mut cases: Vec<CorpusCase> = algebraic_expected
        .iter()
        .map(|(mid, gid, nu)| CorpusCase {
            id: format!("{}__{}", mid, gid),
            mahler: find_m(mid),
            approximant: Approximant::Algebraic(find_g(gid)),
            expected_nu: Some(*nu),
        })
        .collect();

    let truncs = truncation_polynomials();
    for ((tid, t), nu) in truncs.iter().zip([4u64, 8, 16]) {
        cases.push(CorpusCase {
            id: format!("sigma2n__{}", tid),
            mahler: find_m("sigma2n"),
            approximant: Approximant::Rational(t.clone()),
            expected_nu: Some(nu),
        });
    }
    cases.push(CorpusCase {
        id: "cantor3__trunc2".to_owned(),
        mahler: find_m("cantor3"),
        approximant: Approximant::Rational(truncs[0].1.clone()),
        expected_nu: Some(0),
    });
    cases.push(CorpusCase {
        id: "stern__inv1pz".to_owned(),
        mahler: find_m("stern"),
        approximant: Approximant::Rational(
            RationalFunction::new(parse_poly("1").unwrap(), parse_poly("1 + z").unwrap()).unwrap(),
        ),
        expected_nu: Some(1),
    });
    cases.push(CorpusCase {
        id: "tmprod__onemz".to_owned(),
        mahler: find_m("tmprod"),
        approximant: Approximant::Rational(RationalFunction::polynomial(
            parse_poly("1 - z").unwrap(),
        )),
        expected_nu: Some(2),
    });

    cases.sort_by(|a, b| a.id.cmp(&b.id));
    cases
}

/// The violation demo: the geometric control against 1/(1-z) itself.
pub fn violation_case() -> (MahlerFunction, RationalFunction) {
    (
        geometric(),
        RationalFunction::new(parse_poly("1").unwrap(), parse_poly("1 - z").unwrap()).unwrap(),
    )
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    #[test]
    fn corpus_shape() {
        let cases = builtin_cases();
        assert_eq!(cases.len(), 22);
        let algebraic_pairs = cases
            .iter()
            .filter(|c| matches!(c.approximant, Approximant::Algebraic(_)))
            .count();
        assert!(algebraic_pairs >= 12);
        let mut ids: Vec<_> = cases.iter().map(|c| c.id.clone()).collect();
        let sorted = ids.clone();
        ids.dedup();
        assert_eq!(ids, sorted, "ids unique and sorted");
    }

    #[test]
    fn corpus_equations_have_documented_profiles() {
        let s = sigma2n();
        assert_eq!((s.degree(), s.height(), s.radix()), (2, 1, 2));
        let st = stern();
        assert_eq!((st.degree(), st.height(), st.radix()), (2, 2, 2));
        let c = cantor3();
        assert_eq!((c.degree(), c.height(), c.radix()), (1, 1, 3));
        let t = tmprod();
        assert_eq!((t.degree(), t.height(), t.radix()), (1, 1, 2));
        let g = geometric();
        assert_eq!((g.degree(), g.height(), g.radix()), (1, 3, 4));
    }

    #[test]
    fn corpus_series_match_their_oracles() {
        // sigma2n: 1 exactly at powers of two.
        let s = sigma2n().expand(64).unwrap();
        for i in 0..=64usize {
            let expect = i >= 1 && (i & (i - 1)) == 0;
            assert_eq!(!s.coeff(i).is_zero(), expect, "sigma2n index {}", i);
        }
        // cantor3: indicator of ternary digits in {0, 1}.
        let c = cantor3().expand(64).unwrap();
        for i in 0..=64usize {
            let mut m = i;
            let mut ok = true;
            while m > 0 {
                if m % 3 == 2 {
                    ok = false;
                    break;
                }
                m /= 3;
            }
            assert_eq!(!c.coeff(i).is_zero(), ok, "cantor3 index {}", i);
        }
        // tmprod: (-1)^{s_2(i)}.
        let t = tmprod().expand(64).unwrap();
        for i in 0..=64usize {
            let expect = if i.count_ones() % 2 == 0 { 1 } else { -1 };
            assert_eq!(t.coeff(i), &crate::rat::rat_int(expect), "tmprod index {}", i);
        }
        // geometric: all-ones.
        let g = geometric().expand(32).unwrap();
        assert!(g.coeffs().iter().all(|c| c == &crate::rat::rat_int(1)));
    }
}
