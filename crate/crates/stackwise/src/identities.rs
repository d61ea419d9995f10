//! Mechanical verification of the divided-power operator identities.
//!
//! Each verifier builds both sides of one identity as signed
//! combinations of words, applies them to every m-tuple of ideals
//! (and, where stated, every m-multiset), and compares exactly.
//! Identities with hypotheses report a distinct status when the
//! hypotheses fail instead of claiming a counterexample.

use crate::diagram::Color;
use crate::error::Error;
use crate::mvector::{act_word_sum, MMultiset, MTuple, MVector, Slots, TupleVector, Vector};
use crate::poset::{Axiom, ColoredPoset, Ideal, LinearExtension};
use crate::words::Word;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_EXHAUSTIVE_TUPLES: usize = 1_000_000;

/// How to pick the starting tuples an identity is tested on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    /// Random starting tuples; non-exhaustive, for larger posets.
    Sample {
        tuples: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityStatus {
    Holds,
    HypothesisFailed(String),
    Fails(Counterexample),
}

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub tag: &'static str,
    pub params: String,
    pub status: IdentityStatus,
    /// Starting tuples actually tested.
    pub cases: usize,
    pub exhaustive: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self.status, IdentityStatus::Holds)
    }

    pub fn hypothesis_failed(&self) -> bool {
        matches!(self.status, IdentityStatus::HypothesisFailed(_))
    }

    pub fn render_line(&self) -> String {
        let mut line = format!("{} {}: ", self.tag, self.params);
        match &self.status {
            IdentityStatus::Holds => {
                line.push_str(&format!("holds ({} cases", self.cases));
                if !self.exhaustive {
                    line.push_str(", sampled");
                }
                line.push(')');
            }
            IdentityStatus::HypothesisFailed(why) => {
                line.push_str(&format!("hypothesis failed ({why})"));
            }
            IdentityStatus::Fails(ce) => {
                line.push_str(&format!(
                    "FAILS on {} (lhs = {}, rhs = {})",
                    ce.input, ce.lhs, ce.rhs
                ));
            }
        }
        line
    }
}

/// One side of an identity: coefficient times word, summed.
type Side = Vec<(BigRational, Word)>;

fn word_displayed(groups: &[(Color, u32)]) -> Word {
    let mut g = groups.to_vec();
    g.reverse();
    Word::new(g)
}

fn sign(k: u32) -> BigRational {
    if k.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn big(n: u32) -> BigInt {
    BigInt::from(n)
}

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn eval_side<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    start: &Vector<K>,
    side: &Side,
) -> Vector<K> {
    let mut acc = Vector::zero(start.m());
    for (coeff, word) in side {
        acc.add_assign(&act_word_sum(p, ext, start, word).scaled(coeff));
    }
    acc
}

/// Colors of some cover pair in the poset, in either order.
fn colors_of_neighbors(p: &ColoredPoset, b: Color, c: Color) -> bool {
    p.covers().iter().any(|&(x, y)| {
        let (cx, cy) = (p.color_of(x), p.color_of(y));
        (cx, cy) == (b, c) || (cx, cy) == (c, b)
    })
}

fn failed_axioms(p: &ColoredPoset) -> Vec<Axiom> {
    [Axiom::Ec, Axiom::Na, Axiom::Ac, Axiom::Ice2]
        .into_iter()
        .filter(|&a| !p.check_axiom(a).holds)
        .collect()
}

struct Harness<'a> {
    p: &'a ColoredPoset,
    ext: &'a LinearExtension,
    tuples: Vec<Vec<Ideal>>,
    exhaustive: bool,
}

impl<'a> Harness<'a> {
    fn new(
        p: &'a ColoredPoset,
        ext: &'a LinearExtension,
        m: usize,
        mode: VerifyMode,
    ) -> Result<Harness<'a>, Error> {
        let ideals = p.enumerate_ideals()?;
        let n = ideals.len();
        match mode {
            VerifyMode::Exhaustive => {
                let total = n
                    .checked_pow(m as u32)
                    .filter(|&t| t <= MAX_EXHAUSTIVE_TUPLES);
                let Some(total) = total else {
                    return Err(Error::TooLarge(format!(
                        "{n}^{m} starting tuples; use sampling"
                    )));
                };
                let mut tuples = Vec::with_capacity(total);
                let mut idx = vec![0usize; m];
                loop {
                    tuples.push(idx.iter().map(|&i| ideals[i]).collect());
                    let mut slot = 0;
                    loop {
                        if slot == m {
                            return Ok(Harness {
                                p,
                                ext,
                                tuples,
                                exhaustive: true,
                            });
                        }
                        idx[slot] += 1;
                        if idx[slot] < n {
                            break;
                        }
                        idx[slot] = 0;
                        slot += 1;
                    }
                }
            }
            VerifyMode::Sample {
                tuples: count,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let tuples = (0..count)
                    .map(|_| (0..m).map(|_| ideals[rng.gen_range(0..n)]).collect())
                    .collect();
                Ok(Harness {
                    p,
                    ext,
                    tuples,
                    exhaustive: false,
                })
            }
        }
    }

    /// Compare both sides on every starting tuple, then on the
    /// corresponding multisets when asked.
    fn compare(
        &self,
        tag: &'static str,
        params: String,
        lhs: &Side,
        rhs: &Side,
        also_multisets: bool,
    ) -> IdentityCheck {
        let mut cases = 0;
        for tuple in &self.tuples {
            cases += 1;
            let start = TupleVector::unit(MTuple::new(tuple.clone()));
            let mut diff = eval_side(self.p, self.ext, &start, lhs);
            let right = eval_side(self.p, self.ext, &start, rhs);
            diff.sub_assign(&right);
            if !diff.is_zero() {
                let left = eval_side(self.p, self.ext, &start, lhs);
                return IdentityCheck {
                    tag,
                    params,
                    status: IdentityStatus::Fails(Counterexample {
                        input: MTuple::new(tuple.clone()).render(self.p, self.ext),
                        lhs: left.render(self.p, self.ext),
                        rhs: right.render(self.p, self.ext),
                    }),
                    cases,
                    exhaustive: self.exhaustive,
                };
            }
            if also_multisets {
                let start = MVector::unit(MMultiset::new(tuple.clone(), self.ext));
                let mut diff = eval_side(self.p, self.ext, &start, lhs);
                let right = eval_side(self.p, self.ext, &start, rhs);
                diff.sub_assign(&right);
                if !diff.is_zero() {
                    let left = eval_side(self.p, self.ext, &start, lhs);
                    return IdentityCheck {
                        tag,
                        params,
                        status: IdentityStatus::Fails(Counterexample {
                            input: MMultiset::new(tuple.clone(), self.ext).render(self.p, self.ext),
                            lhs: left.render(self.p, self.ext),
                            rhs: right.render(self.p, self.ext),
                        }),
                        cases,
                        exhaustive: self.exhaustive,
                    };
                }
            }
        }
        IdentityCheck {
            tag,
            params,
            status: IdentityStatus::Holds,
            cases,
            exhaustive: self.exhaustive,
        }
    }

    fn skipped(&self, tag: &'static str, params: String, why: String) -> IdentityCheck {
        IdentityCheck {
            tag,
            params,
            status: IdentityStatus::HypothesisFailed(why),
            cases: 0,
            exhaustive: self.exhaustive,
        }
    }
}

fn color_params(pairs: &[(&str, String)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Two groups of colors that never label neighboring elements can be
/// applied in either order.
#[allow(clippy::too_many_arguments)]
pub fn verify_commute(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    b: Color,
    c: Color,
    pw: u32,
    q: u32,
    mode: VerifyMode,
) -> Result<IdentityCheck, Error> {
    if b == c {
        return Err(Error::input("commute needs two distinct colors"));
    }
    let h = Harness::new(p, ext, m, mode)?;
    let params = color_params(&[
        ("b", p.diagram().name(b).to_string()),
        ("c", p.diagram().name(c).to_string()),
        ("p", pw.to_string()),
        ("q", q.to_string()),
        ("m", m.to_string()),
    ]);
    if colors_of_neighbors(p, b, c) {
        return Ok(h.skipped(
            "commute",
            params,
            format!(
                "{} and {} color neighboring elements",
                p.diagram().name(b),
                p.diagram().name(c)
            ),
        ));
    }
    let lhs = vec![(BigRational::one(), word_displayed(&[(c, q), (b, pw)]))];
    let rhs = vec![(BigRational::one(), word_displayed(&[(b, pw), (c, q)]))];
    Ok(h.compare("commute", params, &lhs, &rhs, true))
}

/// Consecutive groups of one color glue into a single group with a
/// binomial coefficient.
pub fn verify_gluing(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    c: Color,
    pw: u32,
    q: u32,
    mode: VerifyMode,
) -> Result<IdentityCheck, Error> {
    let h = Harness::new(p, ext, m, mode)?;
    let params = color_params(&[
        ("c", p.diagram().name(c).to_string()),
        ("p", pw.to_string()),
        ("q", q.to_string()),
        ("m", m.to_string()),
    ]);
    let lhs = vec![(BigRational::one(), word_displayed(&[(c, q), (c, pw)]))];
    let rhs = vec![(
        rat(binomial(big(pw + q), big(pw))),
        word_displayed(&[(c, pw + q)]),
    )];
    Ok(h.compare("gluing", params, &lhs, &rhs, true))
}

fn conditional_hypotheses(
    p: &ColoredPoset,
    b: Color,
    c: Color,
    extra: Option<String>,
) -> Option<String> {
    if let Some(why) = extra {
        return Some(why);
    }
    if b == c {
        return Some("colors must be distinct".to_string());
    }
    let failed = failed_axioms(p);
    if !failed.is_empty() {
        let names: Vec<&str> = failed.iter().map(|a| a.name()).collect();
        return Some(format!("poset fails {}", names.join(", ")));
    }
    None
}

/// The alternating sum over splittings of a color group around another
/// color's group annihilates everything.
#[allow(clippy::too_many_arguments)]
pub fn verify_altsum(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    b: Color,
    c: Color,
    pw: u32,
    q: u32,
    mode: VerifyMode,
) -> Result<IdentityCheck, Error> {
    let h = Harness::new(p, ext, m, mode)?;
    let params = color_params(&[
        ("b", p.diagram().name(b).to_string()),
        ("c", p.diagram().name(c).to_string()),
        ("p", pw.to_string()),
        ("q", q.to_string()),
        ("m", m.to_string()),
    ]);
    let range = (q > pw)
        .then_some(())
        .map_or_else(|| Some(format!("needs q > p, got q={q}, p={pw}")), |_| None);
    if let Some(why) = conditional_hypotheses(p, b, c, range) {
        return Ok(h.skipped("alternating-sum", params, why));
    }
    let lhs: Side = (0..=q)
        .map(|k| (sign(k), word_displayed(&[(c, q - k), (b, pw), (c, k)])))
        .collect();
    let rhs: Side = Vec::new();
    Ok(h.compare("alternating-sum", params, &lhs, &rhs, false))
}

/// A two-group word equals the alternating sum of words shifting its
/// outer color group to the right of the inner one.
#[allow(clippy::too_many_arguments)]
pub fn verify_shift(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    b: Color,
    c: Color,
    pw: u32,
    q: u32,
    mode: VerifyMode,
) -> Result<IdentityCheck, Error> {
    let h = Harness::new(p, ext, m, mode)?;
    let params = color_params(&[
        ("b", p.diagram().name(b).to_string()),
        ("c", p.diagram().name(c).to_string()),
        ("p", pw.to_string()),
        ("q", q.to_string()),
        ("m", m.to_string()),
    ]);
    let range = if q > pw {
        None
    } else {
        Some(format!("needs q > p, got q={q}, p={pw}"))
    };
    if let Some(why) = conditional_hypotheses(p, b, c, range) {
        return Ok(h.skipped("shift", params, why));
    }
    let lhs = vec![(BigRational::one(), word_displayed(&[(c, q), (b, pw)]))];
    let rhs: Side = (0..q)
        .map(|k| {
            (
                sign(k),
                word_displayed(&[(c, q - 1 - k), (b, pw), (c, k + 1)]),
            )
        })
        .collect();
    Ok(h.compare("shift", params, &lhs, &rhs, false))
}

/// A color group sandwiched by another color exchanges to words where
/// the other color is sandwiched instead, with binomial coefficients.
#[allow(clippy::too_many_arguments)]
pub fn verify_exchange(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    b: Color,
    c: Color,
    pw: u32,
    q: u32,
    r: u32,
    mode: VerifyMode,
) -> Result<IdentityCheck, Error> {
    let h = Harness::new(p, ext, m, mode)?;
    let params = color_params(&[
        ("b", p.diagram().name(b).to_string()),
        ("c", p.diagram().name(c).to_string()),
        ("p", pw.to_string()),
        ("q", q.to_string()),
        ("r", r.to_string()),
        ("m", m.to_string()),
    ]);
    let range = if r >= pw {
        None
    } else {
        Some(format!("needs r >= p, got r={r}, p={pw}"))
    };
    if let Some(why) = conditional_hypotheses(p, b, c, range) {
        return Ok(h.skipped("exchange", params, why));
    }
    let lhs = vec![(
        BigRational::one(),
        word_displayed(&[(c, q), (b, pw), (c, r)]),
    )];
    let rhs: Side = (0..=pw.min(q))
        .map(|k| {
            (
                rat(binomial(big(q + r - pw), big(q - k))),
                word_displayed(&[(b, pw - k), (c, q + r), (b, k)]),
            )
        })
        .collect();
    Ok(h.compare("exchange", params, &lhs, &rhs, false))
}

/// The two binomial coefficient identities behind the exchange
/// induction, checked as exact integer arithmetic.
pub fn verify_binomial(pw: u32, q: u32, r: u32, k: u32) -> Result<Vec<IdentityCheck>, Error> {
    if pw < 1 || q < 1 || r < 1 {
        return Err(Error::input(format!(
            "needs p, q, r >= 1, got p={pw}, q={q}, r={r}"
        )));
    }
    if r < pw {
        return Err(Error::input(format!("needs r >= p, got r={r}, p={pw}")));
    }
    if k < 1 || k > q {
        return Err(Error::input(format!("needs 1 <= k <= q, got k={k}, q={q}")));
    }
    let params_a = format!("p={pw} q={q} r={r}");
    let lhs_a = binomial(big(q + r - pw), big(q)) * big(1 + q + r - pw);
    let rhs_a = big(q + 1) * binomial(big(q + 1 + r - pw), big(q + 1));
    let a = IdentityCheck {
        tag: "binomial-a",
        params: params_a,
        status: if lhs_a == rhs_a {
            IdentityStatus::Holds
        } else {
            IdentityStatus::Fails(Counterexample {
                input: "integers".to_string(),
                lhs: lhs_a.to_string(),
                rhs: rhs_a.to_string(),
            })
        },
        cases: 1,
        exhaustive: true,
    };
    let params_b = format!("p={pw} q={q} r={r} k={k}");
    let lhs_b = binomial(big(q + r - pw), big(q - k)) * big(1 + q + r - pw + k)
        + binomial(big(q + r - pw), big(q - k + 1)) * big(k);
    let rhs_b = big(q + 1) * binomial(big(q + 1 + r - pw), big(q + 1 - k));
    let b = IdentityCheck {
        tag: "binomial-b",
        params: params_b,
        status: if lhs_b == rhs_b {
            IdentityStatus::Holds
        } else {
            IdentityStatus::Fails(Counterexample {
                input: "integers".to_string(),
                lhs: lhs_b.to_string(),
                rhs: rhs_b.to_string(),
            })
        },
        cases: 1,
        exhaustive: true,
    };
    Ok(vec![a, b])
}

/// Sweep every verifier over all parameter tuples within the given
/// bounds, one check per line.
pub fn verify_grid(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    pmax: u32,
    qmax: u32,
    rmax: u32,
    mode: VerifyMode,
) -> Result<Vec<IdentityCheck>, Error> {
    let colors = p.diagram().colors().collect::<Vec<_>>();
    let mut out = Vec::new();
    for &c in &colors {
        for pw in 0..=pmax {
            for q in 0..=qmax {
                out.push(verify_gluing(p, ext, m, c, pw, q, mode)?);
            }
        }
    }
    for &b in &colors {
        for &c in &colors {
            if b == c {
                continue;
            }
            for pw in 0..=pmax {
                for q in 0..=qmax {
                    out.push(verify_commute(p, ext, m, b, c, pw, q, mode)?);
                    if q > pw {
                        out.push(verify_altsum(p, ext, m, b, c, pw, q, mode)?);
                        out.push(verify_shift(p, ext, m, b, c, pw, q, mode)?);
                    }
                    for r in pw..=rmax {
                        out.push(verify_exchange(p, ext, m, b, c, pw, q, r, mode)?);
                    }
                }
            }
        }
    }
    for pw in 1..=pmax {
        for q in 1..=qmax {
            for r in pw.max(1)..=rmax {
                for k in 1..=q {
                    out.extend(verify_binomial(pw, q, r, k)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{chain, figure31};

    fn fig() -> (ColoredPoset, Vec<Color>) {
        let p = figure31();
        let colors = ["a", "b", "c", "d"]
            .iter()
            .map(|n| p.diagram().color(n).unwrap())
            .collect();
        (p, colors)
    }

    const EX: VerifyMode = VerifyMode::Exhaustive;

    #[test]
    fn commute_distant_colors() {
        let (p, cs) = fig();
        let ext = p.default_extension().clone();
        let check = verify_commute(&p, &ext, 2, cs[0], cs[3], 1, 1, EX).unwrap();
        assert!(check.holds());
        assert_eq!(check.cases, 81);
        assert!(check.exhaustive);

        // an empty group commutes with anything that satisfies the
        // neighbor hypothesis
        let check = verify_commute(&p, &ext, 2, cs[0], cs[3], 0, 2, EX).unwrap();
        assert!(check.holds());

        // colors of a covering pair are skipped
        let check = verify_commute(&p, &ext, 2, cs[0], cs[1], 1, 1, EX).unwrap();
        assert!(check.hypothesis_failed());

        assert!(verify_commute(&p, &ext, 2, cs[0], cs[0], 1, 1, EX).is_err());
    }

    #[test]
    fn commute_on_chain() {
        let p = chain(3).unwrap();
        let ext = p.default_extension().clone();
        let a1 = p.diagram().color("a1").unwrap();
        let a3 = p.diagram().color("a3").unwrap();
        let check = verify_commute(&p, &ext, 2, a1, a3, 2, 1, EX).unwrap();
        assert!(check.holds());
        assert_eq!(check.cases, 16);
    }

    #[test]
    fn gluing_coefficients() {
        let (p, cs) = fig();
        let ext = p.default_extension().clone();
        let check = verify_gluing(&p, &ext, 2, cs[2], 1, 1, EX).unwrap();
        assert!(check.holds());
        let check = verify_gluing(&p, &ext, 3, cs[2], 1, 2, EX).unwrap();
        assert!(check.holds());
        let check = verify_gluing(&p, &ext, 2, cs[2], 0, 2, EX).unwrap();
        assert!(check.holds());
    }

    #[test]
    fn alternating_sum_vanishes() {
        let (p, cs) = fig();
        let ext = p.default_extension().clone();
        let check = verify_altsum(&p, &ext, 2, cs[1], cs[2], 1, 2, EX).unwrap();
        assert!(check.holds());
        let check = verify_altsum(&p, &ext, 2, cs[0], cs[3], 0, 1, EX).unwrap();
        assert!(check.holds());
        let check = verify_altsum(&p, &ext, 2, cs[0], cs[2], 0, 2, EX).unwrap();
        assert!(check.holds());

        let check = verify_altsum(&p, &ext, 2, cs[1], cs[2], 2, 2, EX).unwrap();
        assert!(check.hypothesis_failed());
    }

    #[test]
    fn shift_identity() {
        let (p, cs) = fig();
        let ext = p.default_extension().clone();
        let check = verify_shift(&p, &ext, 2, cs[0], cs[2], 0, 1, EX).unwrap();
        assert!(check.holds());
        let check = verify_shift(&p, &ext, 2, cs[1], cs[2], 1, 2, EX).unwrap();
        assert!(check.holds());
    }

    #[test]
    fn exchange_identity() {
        let (p, cs) = fig();
        let ext = p.default_extension().clone();
        // tautology when the outer group is empty
        let check = verify_exchange(&p, &ext, 2, cs[1], cs[2], 2, 0, 2, EX).unwrap();
        assert!(check.holds());
        // reduces to gluing when the middle group is empty
        let check = verify_exchange(&p, &ext, 2, cs[1], cs[2], 0, 2, 1, EX).unwrap();
        assert!(check.holds());
        let check = verify_exchange(&p, &ext, 2, cs[1], cs[2], 1, 1, 1, EX).unwrap();
        assert!(check.holds());

        let check = verify_exchange(&p, &ext, 2, cs[1], cs[2], 2, 1, 1, EX).unwrap();
        assert!(check.hypothesis_failed());
    }

    #[test]
    fn hypothesis_failures_name_axioms() {
        // a three element chain colored c, b, c violates ICE2
        let d = crate::diagram::DynkinDiagram::new(&["b", "c"], &[("b", "c")]).unwrap();
        let p = ColoredPoset::new(
            d,
            &[("u", "c"), ("t", "b"), ("s", "c")],
            &[("u", "t"), ("t", "s")],
        )
        .unwrap();
        let ext = p.default_extension().clone();
        let b = p.diagram().color("b").unwrap();
        let c = p.diagram().color("c").unwrap();
        let check = verify_altsum(&p, &ext, 1, b, c, 0, 1, EX).unwrap();
        match check.status {
            IdentityStatus::HypothesisFailed(ref why) => assert!(why.contains("ICE2")),
            ref other => panic!("expected a hypothesis failure, got {other:?}"),
        }
    }

    #[test]
    fn binomial_identities() {
        let checks = verify_binomial(1, 1, 1, 1).unwrap();
        assert!(checks.iter().all(|c| c.holds()));
        let checks = verify_binomial(1, 2, 3, 2).unwrap();
        assert!(checks.iter().all(|c| c.holds()));
        assert!(verify_binomial(0, 1, 1, 1).is_err());
        assert!(verify_binomial(2, 1, 1, 1).is_err());
        assert!(verify_binomial(1, 2, 1, 3).is_err());
    }

    #[test]
    fn sampling_mode_is_labeled() {
        let (p, cs) = fig();
        let ext = p.default_extension().clone();
        let mode = VerifyMode::Sample {
            tuples: 10,
            seed: 7,
        };
        let check = verify_gluing(&p, &ext, 2, cs[2], 1, 1, mode).unwrap();
        assert!(check.holds());
        assert!(!check.exhaustive);
        assert_eq!(check.cases, 10);
        assert!(check.render_line().contains("sampled"));
    }

    #[test]
    fn full_grid_has_no_failures() {
        let (p, _) = fig();
        let ext = p.default_extension().clone();
        let checks = verify_grid(&p, &ext, 2, 2, 2, 2, EX).unwrap();
        assert!(!checks.is_empty());
        for check in &checks {
            assert!(
                !matches!(check.status, IdentityStatus::Fails(_)),
                "{}",
                check.render_line()
            );
        }
        // the conditional hypotheses all hold here except neighbor
        // color pairs for commute
        let failed: Vec<_> = checks.iter().filter(|c| c.hypothesis_failed()).collect();
        assert!(failed.iter().all(|c| c.tag == "commute"));
    }
}
