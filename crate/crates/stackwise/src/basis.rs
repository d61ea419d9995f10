//! The stackwise basis: construction, linear independence with an
//! explicit dependence witness when it fails, and exact triangular
//! expansion of arbitrary word actions over the basis.

use crate::diagram::Color;
use crate::error::Error;
use crate::mvector::{
    act_word_sum, gravity_cmp_multisets, ppartition_to_flag, MFlag, MMultiset, MVector, PPartition,
    Slots,
};
use crate::poset::{Axiom, ColoredPoset, Elem, LinearExtension, PosetClass};
use crate::words::{classify_case, stackwise_word, word_cmp, Word, WordCase};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

/// The action of a flag's word on the all-empty multiset. Defined for
/// any colored poset; the raising operator sums over all admissible
/// extensions of each slot.
pub fn stackwise_vector(p: &ColoredPoset, ext: &LinearExtension, flag: &MFlag) -> MVector {
    let word = stackwise_word(p, ext, flag);
    act_word_sum(p, ext, &MVector::unit(MMultiset::empty(flag.m())), &word)
}

#[derive(Debug, Clone)]
pub struct BasisEntry {
    pub flag: MFlag,
    pub vector: MVector,
    /// Coefficient of the gravity-least term; a positive integer.
    pub leading: BigInt,
}

#[derive(Debug, Clone)]
pub struct StackwiseBasis {
    m: usize,
    entries: Vec<BasisEntry>,
}

impl StackwiseBasis {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }
}

/// Two distinct flags whose vectors are exactly proportional, produced
/// on a poset that fails EC or ND. The scale is always two: the first
/// word carries the witness color as two singleton groups, the second
/// glues them into one squared group.
#[derive(Debug, Clone)]
pub struct DependenceReport {
    pub axiom: Axiom,
    pub pair: (Elem, Elem),
    pub color: Color,
    pub m: usize,
    pub extension: LinearExtension,
    pub flag1: MFlag,
    pub flag2: MFlag,
    pub word1: Word,
    pub word2: Word,
    pub vector1: MVector,
    pub vector2: MVector,
    pub ratio: BigRational,
}

impl DependenceReport {
    pub fn render(&self, p: &ColoredPoset) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} fails at {}, {} (color {})\n",
            self.axiom.name(),
            p.name(self.pair.0),
            p.name(self.pair.1),
            p.diagram().name(self.color)
        ));
        out.push_str(&format!(
            "extension: {}\n",
            self.extension
                .order()
                .iter()
                .map(|&e| p.name(e))
                .collect::<Vec<_>>()
                .join(" < ")
        ));
        out.push_str(&format!(
            "word <{}> gives {}\n",
            self.word1.render(p),
            self.vector1.render(p, &self.extension)
        ));
        out.push_str(&format!(
            "word <{}> gives {}\n",
            self.word2.render(p),
            self.vector2.render(p, &self.extension)
        ));
        out.push_str(&format!(
            "the first is {} times the second: dependent for m = {}",
            crate::mvector::render_coeff(&self.ratio),
            self.m
        ));
        out
    }
}

#[derive(Debug, Clone)]
pub enum BasisOutcome {
    Basis(StackwiseBasis),
    Dependent(Box<DependenceReport>),
}

/// Every bounded order-reversing assignment, one value vector per
/// element in declaration order.
fn all_ppartition_values(p: &ColoredPoset, ext: &LinearExtension, m: u32) -> Vec<Vec<u32>> {
    let order = ext.order();
    let mut out = Vec::new();
    let mut values = vec![0u32; p.len()];
    fn rec(
        p: &ColoredPoset,
        order: &[Elem],
        at: usize,
        m: u32,
        values: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let Some(&e) = order.get(at) else {
            out.push(values.clone());
            return;
        };
        let cap = p
            .lower_covers(e)
            .iter()
            .map(|&u| values[u.0])
            .min()
            .unwrap_or(m)
            .min(m);
        for v in 0..=cap {
            values[e.0] = v;
            rec(p, order, at + 1, m, values, out);
        }
        values[e.0] = 0;
    }
    rec(p, order, 0, m, &mut values, &mut out);
    out
}

/// Build the full family of stackwise vectors, one per flag, verifying
/// the triangular structure: each vector's gravity-least term is its
/// own flag's multiset, with a positive integer coefficient, and those
/// leading multisets are pairwise distinct. On a poset failing EC or
/// ND, returns the explicit dependence witness instead.
pub fn build_basis(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
) -> Result<BasisOutcome, Error> {
    if let Some(report) = dependence_report(p, m)? {
        return Ok(BasisOutcome::Dependent(Box::new(report)));
    }
    let mut entries = Vec::new();
    let mut seen = HashSet::new();
    for values in all_ppartition_values(p, ext, m as u32) {
        let psi = PPartition::new(p, values, m as u32)?;
        let flag = ppartition_to_flag(p, &psi);
        let vector = stackwise_vector(p, ext, &flag);
        let (lead_multiset, lead_coeff) = vector.leading_term(ext).ok_or_else(|| {
            Error::Inconsistent(format!(
                "stackwise vector of {} vanished",
                flag.render(p, ext)
            ))
        })?;
        if lead_multiset.ideals() != flag.ideals() {
            return Err(Error::Inconsistent(format!(
                "leading term {} of {} is not the flag's own multiset",
                lead_multiset.render(p, ext),
                flag.render(p, ext)
            )));
        }
        if !lead_coeff.is_integer() || !lead_coeff.is_positive() {
            return Err(Error::Inconsistent(format!(
                "leading coefficient {} of {} is not a positive integer",
                lead_coeff,
                flag.render(p, ext)
            )));
        }
        if !seen.insert(lead_multiset.clone()) {
            return Err(Error::Inconsistent(format!(
                "duplicate leading multiset {}",
                lead_multiset.render(p, ext)
            )));
        }
        let leading = lead_coeff.to_integer();
        entries.push(BasisEntry {
            flag,
            vector,
            leading,
        });
    }
    entries.sort_by(|a, b| gravity_cmp_multisets(ext, a.flag.ideals(), b.flag.ideals()));
    Ok(BasisOutcome::Basis(StackwiseBasis { m, entries }))
}

/// When the poset fails EC or ND, build the two flags whose vectors
/// are proportional. The witness pair x, y shares a color b; below
/// their generated filter every element gets the full value m, then x
/// and y get either two separate single values or a doubled value on
/// x alone. Gluing makes the first vector exactly twice the second.
pub fn dependence_report(p: &ColoredPoset, m: usize) -> Result<Option<DependenceReport>, Error> {
    let ec = p.check_axiom(Axiom::Ec);
    let nd = p.check_axiom(Axiom::Nd);
    let (axiom, x, y) = if !ec.holds {
        (Axiom::Ec, ec.witness[0], ec.witness[1])
    } else if !nd.holds {
        (Axiom::Nd, nd.witness[0], nd.witness[1])
    } else {
        return Ok(None);
    };
    let m = m.max(2);
    let color = p.color_of(x);

    // the ideal complementing the filter generated by the pair
    let filter: Vec<Elem> = p
        .elements()
        .filter(|&u| p.leq(x, u) || p.leq(y, u))
        .collect();
    let in_filter: HashSet<Elem> = filter.iter().copied().collect();
    let mut order: Vec<Elem> = p
        .default_extension()
        .order()
        .iter()
        .copied()
        .filter(|e| !in_filter.contains(e))
        .collect();
    let ideal_len = order.len();
    order.push(x);
    order.push(y);
    order.extend(
        p.default_extension()
            .order()
            .iter()
            .copied()
            .filter(|&e| in_filter.contains(&e) && e != x && e != y),
    );
    let ext = p.extension(order)?;

    let mut values1 = vec![0u32; p.len()];
    for &e in &ext.order()[..ideal_len] {
        values1[e.0] = m as u32;
    }
    let mut values2 = values1.clone();
    values1[x.0] = 1;
    values1[y.0] = 1;
    values2[x.0] = 2;
    values2[y.0] = 0;
    let psi1 = PPartition::new(p, values1, m as u32)?;
    let psi2 = PPartition::new(p, values2, m as u32)?;
    let flag1 = ppartition_to_flag(p, &psi1);
    let flag2 = ppartition_to_flag(p, &psi2);
    let word1 = stackwise_word(p, &ext, &flag1);
    let word2 = stackwise_word(p, &ext, &flag2);
    let vector1 = stackwise_vector(p, &ext, &flag1);
    let vector2 = stackwise_vector(p, &ext, &flag2);
    let ratio = BigRational::from_integer(BigInt::from(2));
    let mut diff = vector1.clone();
    diff.sub_assign(&vector2.scaled(&ratio));
    if diff.is_zero() && !vector1.is_zero() {
        Ok(Some(DependenceReport {
            axiom,
            pair: (x, y),
            color,
            m,
            extension: ext,
            flag1,
            flag2,
            word1,
            word2,
            vector1,
            vector2,
            ratio,
        }))
    } else {
        Err(Error::Inconsistent(
            "dependence construction did not produce proportional vectors".to_string(),
        ))
    }
}

/// A word action resolved into flag coordinates.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub m: usize,
    /// Flag coordinates in gravity order of the flags' multisets.
    pub coefficients: Vec<(MFlag, BigRational)>,
    pub integral: bool,
}

impl Expansion {
    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn render(&self, p: &ColoredPoset, ext: &LinearExtension) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coefficients
            .iter()
            .map(|(flag, c)| {
                format!(
                    "{} * {}",
                    crate::mvector::render_coeff(c),
                    flag.render(p, ext)
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Resolves vectors into flag coordinates by gravity-triangular back
/// substitution, caching each flag's stackwise vector.
pub struct Expander<'a> {
    p: &'a ColoredPoset,
    ext: &'a LinearExtension,
    m: usize,
    assert_integral: bool,
    cache: HashMap<MFlag, (MVector, BigRational)>,
}

impl<'a> Expander<'a> {
    pub fn new(p: &'a ColoredPoset, ext: &'a LinearExtension, m: usize) -> Expander<'a> {
        let class = p.classify().class;
        let assert_integral = matches!(class, PosetClass::DComplete | PosetClass::Minuscule);
        Expander {
            p,
            ext,
            m,
            assert_integral,
            cache: HashMap::new(),
        }
    }

    pub fn expand(&mut self, word: &Word) -> Result<Expansion, Error> {
        let start = MVector::unit(MMultiset::empty(self.m));
        let v = act_word_sum(self.p, self.ext, &start, word);
        self.expand_vector(v)
    }

    /// Repeatedly strip the gravity-least term: it must be a chain, so
    /// it names a flag, and subtracting the right rational multiple of
    /// that flag's vector moves the least remaining term strictly up.
    pub fn expand_vector(&mut self, v: MVector) -> Result<Expansion, Error> {
        let mut residual = v;
        let mut coefficients: Vec<(MFlag, BigRational)> = Vec::new();
        let mut integral = true;
        let mut last_lead: Option<MMultiset> = None;
        while !residual.is_zero() {
            let (lead, coeff) = residual
                .leading_term(self.ext)
                .expect("nonzero vector has a leading term");
            let lead = lead.clone();
            let coeff = coeff.clone();
            if let Some(prev) = &last_lead {
                if gravity_cmp_multisets(self.ext, prev.ideals(), lead.ideals()) != Ordering::Less {
                    return Err(Error::Inconsistent(format!(
                        "expansion stalled at {}",
                        lead.render(self.p, self.ext)
                    )));
                }
            }
            if !lead.is_chain() {
                return Err(Error::SpanViolation(format!(
                    "leading multiset {} is not a flag",
                    lead.render(self.p, self.ext)
                )));
            }
            let flag = MFlag::new(self.p, lead.ideals().to_vec())?;
            let (sv, lead_coeff) = self.stackwise(&flag);
            let c = coeff / lead_coeff;
            residual.sub_assign(&sv.scaled(&c));
            if !c.is_integer() {
                integral = false;
                if self.assert_integral {
                    return Err(Error::IntegralityViolation(format!(
                        "coefficient {} on {}",
                        c,
                        flag.render(self.p, self.ext)
                    )));
                }
            }
            coefficients.push((flag, c));
            last_lead = Some(lead);
        }
        Ok(Expansion {
            m: self.m,
            coefficients,
            integral,
        })
    }

    fn stackwise(&mut self, flag: &MFlag) -> (MVector, BigRational) {
        if let Some((v, c)) = self.cache.get(flag) {
            return (v.clone(), c.clone());
        }
        let v = stackwise_vector(self.p, self.ext, flag);
        let c = v
            .leading_term(self.ext)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::one);
        self.cache.insert(flag.clone(), (v.clone(), c.clone()));
        (v, c)
    }
}

pub fn expand_word(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    word: &Word,
) -> Result<Expansion, Error> {
    Expander::new(p, ext, m).expand(word)
}

#[derive(Debug, Clone)]
pub struct CertifyRun {
    pub m: usize,
    pub extension: String,
    pub basis_size: usize,
    pub words_expanded: usize,
}

#[derive(Debug, Clone)]
pub struct CertifyReport {
    pub class: PosetClass,
    pub m_max: usize,
    pub extensions_checked: usize,
    pub random_words: usize,
    pub seed: u64,
    pub runs: Vec<CertifyRun>,
    pub failures: Vec<String>,
    pub dependence: Option<DependenceReport>,
}

impl CertifyReport {
    pub fn certified(&self) -> bool {
        self.failures.is_empty() && self.dependence.is_none()
    }

    pub fn render(&self, p: &ColoredPoset) -> String {
        let mut out = String::new();
        out.push_str(&format!("class: {}\n", self.class));
        if let Some(dep) = &self.dependence {
            out.push_str(&dep.render(p));
            out.push('\n');
        }
        for run in &self.runs {
            out.push_str(&format!(
                "m={} extension {}: basis {}, {} words expanded\n",
                run.m, run.extension, run.basis_size, run.words_expanded
            ));
        }
        for f in &self.failures {
            out.push_str(&format!("FAILURE: {f}\n"));
        }
        out.push_str(if self.certified() {
            "certified"
        } else {
            "NOT certified"
        });
        out
    }
}

fn random_word(rng: &mut ChaCha8Rng, colors: &[Color], max_len: u32) -> Word {
    let target = rng.gen_range(1..=max_len);
    let mut groups = Vec::new();
    let mut total = 0;
    while total < target {
        let mult = rng.gen_range(1..=3).min(target - total);
        groups.push((colors[rng.gen_range(0..colors.len())], mult));
        total += mult;
    }
    Word::new(groups)
}

fn flag_of_minimal(p: &ColoredPoset, z: Elem, q: u32, m: usize) -> Result<MFlag, Error> {
    let mut values = vec![0u32; p.len()];
    values[z.0] = q;
    let psi = PPartition::new(p, values, m as u32)?;
    Ok(ppartition_to_flag(p, &psi))
}

/// Check one expansion against the predicted case for its word.
fn check_case_consistency(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    word: &Word,
    case: &WordCase,
    expansion: &Expansion,
) -> Result<(), String> {
    let describe = |msg: String| {
        Err(format!(
            "word <{}> (case {}): {}",
            word.render(p),
            case.label(),
            msg
        ))
    };
    match case {
        WordCase::ZeroNoMinimal | WordCase::ZeroOverflow => {
            if !expansion.is_zero() {
                return describe("expected the zero vector".to_string());
            }
        }
        WordCase::Minimal { element, .. } => {
            let (_, q) = word.groups().last().copied().expect("augmented word");
            let expected = flag_of_minimal(p, *element, q, m).map_err(|e| e.to_string())?;
            if expansion.coefficients.len() != 1
                || expansion.coefficients[0].0 != expected
                || !expansion.coefficients[0].1.is_one()
            {
                return describe(format!(
                    "expected 1 * {}, got {}",
                    expected.render(p, ext),
                    expansion.render(p, ext)
                ));
            }
        }
        WordCase::Glued { flag, coefficient } => {
            let want = BigRational::from_integer(coefficient.clone());
            if expansion.coefficients.len() != 1
                || &expansion.coefficients[0].0 != flag
                || expansion.coefficients[0].1 != want
            {
                return describe(format!(
                    "expected {} * {}, got {}",
                    coefficient,
                    flag.render(p, ext),
                    expansion.render(p, ext)
                ));
            }
        }
        WordCase::Stackwise { flag } => {
            if expansion.coefficients.len() != 1
                || &expansion.coefficients[0].0 != flag
                || !expansion.coefficients[0].1.is_one()
            {
                return describe(format!(
                    "expected 1 * {}, got {}",
                    flag.render(p, ext),
                    expansion.render(p, ext)
                ));
            }
        }
        WordCase::Lower => {
            for (flag, c) in &expansion.coefficients {
                if !c.is_integer() {
                    return describe(format!(
                        "non-integer coefficient {c} on {}",
                        flag.render(p, ext)
                    ));
                }
                let fw = stackwise_word(p, ext, flag);
                if word_cmp(p, ext, m, &fw, word) != Ordering::Less {
                    return describe(format!(
                        "flag word <{}> is not strictly below",
                        fw.render(p)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Drive the full certification: for each bound and extension, build
/// the basis, expand every augmented stackwise word and a seeded batch
/// of random words, and check each expansion against its predicted
/// case. A poset failing EC or ND short-circuits to the dependence
/// witness.
pub fn certify_standard(
    p: &ColoredPoset,
    m_max: usize,
    all_extensions: bool,
    random_words: usize,
    seed: u64,
) -> Result<CertifyReport, Error> {
    let classification = p.classify();
    let class = classification.class;
    let mut report = CertifyReport {
        class,
        m_max,
        extensions_checked: 0,
        random_words,
        seed,
        runs: Vec::new(),
        failures: Vec::new(),
        dependence: None,
    };
    if !classification.report(Axiom::Ec).holds || !classification.report(Axiom::Nd).holds {
        report.dependence = dependence_report(p, 2.max(m_max))?;
        return Ok(report);
    }
    let extensions: Vec<LinearExtension> = if all_extensions {
        p.linear_extensions().collect()
    } else {
        vec![p.default_extension().clone()]
    };
    report.extensions_checked = extensions.len();
    let colors: Vec<Color> = p.diagram().colors().collect();
    for m in 1..=m_max {
        for ext in &extensions {
            let ext_name = ext
                .order()
                .iter()
                .map(|&e| p.name(e))
                .collect::<Vec<_>>()
                .join("<");
            let basis = match build_basis(p, ext, m)? {
                BasisOutcome::Basis(b) => b,
                BasisOutcome::Dependent(dep) => {
                    report.dependence = Some(*dep);
                    return Ok(report);
                }
            };
            let mut expander = Expander::new(p, ext, m);
            let mut words_expanded = 0;
            for entry in basis.entries() {
                let tail = stackwise_word(p, ext, &entry.flag);
                for &c in &colors {
                    for q in 1..=m as u32 {
                        let word = tail.with_leading(c, q);
                        words_expanded += 1;
                        let case = match classify_case(p, ext, m, &word) {
                            Ok(case) => case,
                            Err(e) => {
                                report
                                    .failures
                                    .push(format!("word <{}>: {}", word.render(p), e));
                                continue;
                            }
                        };
                        match expander.expand(&word) {
                            Ok(expansion) => {
                                if let Err(msg) =
                                    check_case_consistency(p, ext, m, &word, &case, &expansion)
                                {
                                    report.failures.push(msg);
                                }
                            }
                            Err(e) => {
                                report
                                    .failures
                                    .push(format!("word <{}>: {}", word.render(p), e))
                            }
                        }
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..random_words {
                let word = random_word(&mut rng, &colors, 8);
                words_expanded += 1;
                if let Err(e) = expander.expand(&word) {
                    report
                        .failures
                        .push(format!("random word <{}>: {}", word.render(p), e));
                }
            }
            report.runs.push(CertifyRun {
                m,
                extension: ext_name,
                basis_size: basis.len(),
                words_expanded,
            });
        }
    }
    Ok(report)
}
