//! The representation layer on the split lattice: μ-diagonal
//! operators, exact matrix verification of the Lie algebra relations,
//! weights, multichain counting, and the downward (dual) basis.

use crate::basis::{build_basis, BasisOutcome, StackwiseBasis};
use crate::diagram::Color;
use crate::error::Error;
use crate::lattice::{lower_terms, raise_terms};
use crate::mvector::{Slots, Vector};
use crate::poset::{ColoredPoset, Ideal, LinearExtension, PosetClass};
use num_rational::BigRational;
use std::collections::HashMap;

/// Relation checks build dense work proportional to the square of the
/// ideal count; refuse beyond this unless forced.
pub const MAX_REP_DIM: usize = 10_000;

/// The diagonal eigenvalues μ_i(I), one integer per ideal and color.
///
/// Seeded at the full ideal by the top element's color and propagated
/// down the split lattice: removing an element of color k subtracts
/// the GCM entry θ_{ki} from μ_i. Construction verifies that every
/// descent path agrees and that the closed form (full-ideal row minus
/// the GCM rows of all removed elements) reproduces the table.
#[derive(Debug, Clone)]
pub struct MuTable {
    ideals: Vec<Ideal>,
    index: HashMap<Ideal, usize>,
    values: Vec<Vec<i64>>,
}

impl MuTable {
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn row(&self, ideal: Ideal) -> &[i64] {
        &self.values[self.index[&ideal]]
    }

    pub fn value(&self, ideal: Ideal, color: Color) -> i64 {
        self.values[self.index[&ideal]][color.0]
    }
}

/// Requires a unique maximal element; every d-complete poset has one,
/// and the relation checks are also meaningful on posets that are not,
/// so classification is deliberately not enforced here.
pub fn mu_table(p: &ColoredPoset) -> Result<MuTable, Error> {
    let maxima: Vec<_> = p.maximal_elements().collect();
    let [top] = maxima.as_slice() else {
        return Err(Error::input(format!(
            "needs a unique maximal element, found {}",
            maxima.len()
        )));
    };
    let n = p.diagram().len();
    let gcm = p.diagram().gcm();
    let ideals = p.enumerate_ideals()?;
    let index: HashMap<Ideal, usize> = ideals.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut values: Vec<Option<Vec<i64>>> = vec![None; ideals.len()];

    let full = p.full_ideal();
    let mut top_row = vec![0i64; n];
    top_row[p.color_of(*top).0] = 1;
    values[index[&full]] = Some(top_row);

    for pos in (0..ideals.len()).rev() {
        let big = ideals[pos];
        let Some(row) = values[pos].clone() else {
            return Err(Error::Inconsistent(format!(
                "no descent path reached {}",
                p.ideal_name(big)
            )));
        };
        for x in p.removable(big) {
            let k = p.color_of(x);
            let child: Vec<i64> = (0..n).map(|i| row[i] - gcm.entry(k, Color(i))).collect();
            let slot = &mut values[index[&big.without(x)]];
            match slot {
                None => *slot = Some(child),
                Some(existing) => {
                    if *existing != child {
                        return Err(Error::Inconsistent(format!(
                            "descent paths disagree at {}",
                            p.ideal_name(big.without(x))
                        )));
                    }
                }
            }
        }
    }

    let values: Vec<Vec<i64>> = values
        .into_iter()
        .map(|v| v.expect("all ideals reached from the full ideal"))
        .collect();

    // closed form: subtract the GCM row of every removed element
    let full_row = values[index[&full]].clone();
    for (pos, &ideal) in ideals.iter().enumerate() {
        for i in 0..n {
            let drop: i64 = full
                .elems()
                .filter(|&x| !ideal.contains(x))
                .map(|x| gcm.entry(p.color_of(x), Color(i)))
                .sum();
            if values[pos][i] != full_row[i] - drop {
                return Err(Error::Inconsistent(format!(
                    "recursion and closed form disagree at {}",
                    p.ideal_name(ideal)
                )));
            }
        }
    }

    Ok(MuTable {
        ideals,
        index,
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationTag {
    Xx,
    Yy,
    Hh,
    Hx,
    Hy,
    Xy,
    XSquared,
    EigenRange,
    MinIffRaise,
}

impl RelationTag {
    pub fn name(&self) -> &'static str {
        match self {
            RelationTag::Xx => "XX",
            RelationTag::Yy => "YY",
            RelationTag::Hh => "HH",
            RelationTag::Hx => "HX",
            RelationTag::Hy => "HY",
            RelationTag::Xy => "XY",
            RelationTag::XSquared => "X-squared",
            RelationTag::EigenRange => "eigen-range",
            RelationTag::MinIffRaise => "min-iff-raise",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub tag: RelationTag,
    pub colors: Vec<Color>,
    pub holds: bool,
    pub witness: Option<String>,
}

impl RelationReport {
    pub fn render(&self, p: &ColoredPoset) -> String {
        let names: Vec<&str> = self.colors.iter().map(|&c| p.diagram().name(c)).collect();
        let head = format!("{}({})", self.tag.name(), names.join(", "));
        match (&self.holds, &self.witness) {
            (true, _) => format!("{head}: holds"),
            (false, Some(w)) => format!("{head}: FAILS, {w}"),
            (false, None) => format!("{head}: FAILS"),
        }
    }
}

/// Columns of integers indexed by split basis position.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Mat {
    cols: Vec<Vec<(usize, i64)>>,
}

impl Mat {
    fn zero(n: usize) -> Mat {
        Mat {
            cols: vec![Vec::new(); n],
        }
    }

    fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    fn mul(&self, other: &Mat) -> Mat {
        let mut out = Mat::zero(other.cols.len());
        for (j, col) in other.cols.iter().enumerate() {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(k, v) in col {
                for &(i, w) in &self.cols[k] {
                    *acc.entry(i).or_insert(0) += v * w;
                }
            }
            let mut entries: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
            entries.sort_unstable();
            out.cols[j] = entries;
        }
        out
    }

    fn sub(&self, other: &Mat) -> Mat {
        let mut out = Mat::zero(self.cols.len());
        for j in 0..self.cols.len() {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(i, v) in &self.cols[j] {
                *acc.entry(i).or_insert(0) += v;
            }
            for &(i, v) in &other.cols[j] {
                *acc.entry(i).or_insert(0) -= v;
            }
            let mut entries: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
            entries.sort_unstable();
            out.cols[j] = entries;
        }
        out
    }

    fn scaled(&self, s: i64) -> Mat {
        if s == 0 {
            return Mat::zero(self.cols.len());
        }
        Mat {
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|&(i, v)| (i, v * s)).collect())
                .collect(),
        }
    }

    fn commutator(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    fn entry(&self, i: usize, j: usize) -> i64 {
        self.cols[j]
            .iter()
            .find(|&&(r, _)| r == i)
            .map(|&(_, v)| v)
            .unwrap_or(0)
    }
}

struct RelationChecker<'a> {
    p: &'a ColoredPoset,
    mu: &'a MuTable,
    x: Vec<Mat>,
    y: Vec<Mat>,
    h: Vec<Mat>,
}

impl<'a> RelationChecker<'a> {
    fn new(
        p: &'a ColoredPoset,
        mu: &'a MuTable,
        force: bool,
    ) -> Result<RelationChecker<'a>, Error> {
        let dim = mu.ideals.len();
        if dim > MAX_REP_DIM && !force {
            return Err(Error::TooLarge(format!(
                "{dim} splits exceed the relation check limit of {MAX_REP_DIM}"
            )));
        }
        let n = p.diagram().len();
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        let mut h = Vec::with_capacity(n);
        for c in 0..n {
            let color = Color(c);
            let mut xm = Mat::zero(dim);
            let mut ym = Mat::zero(dim);
            let mut hm = Mat::zero(dim);
            for (j, &ideal) in mu.ideals.iter().enumerate() {
                for bigger in raise_terms(p, ideal, color) {
                    xm.cols[j].push((mu.index[&bigger], 1));
                }
                for smaller in lower_terms(p, ideal, color) {
                    ym.cols[j].push((mu.index[&smaller], 1));
                }
                let eig = mu.values[j][c];
                if eig != 0 {
                    hm.cols[j].push((j, eig));
                }
            }
            x.push(xm);
            y.push(ym);
            h.push(hm);
        }
        Ok(RelationChecker { p, mu, x, y, h })
    }

    fn witness(&self, diff: &Mat, lhs: &Mat, rhs: &Mat) -> Option<String> {
        for (j, col) in diff.cols.iter().enumerate() {
            if let Some(&(i, _)) = col.first() {
                return Some(format!(
                    "acting on {}: component at {} is {} vs {}",
                    self.p.ideal_name(self.mu.ideals[j]),
                    self.p.ideal_name(self.mu.ideals[i]),
                    lhs.entry(i, j),
                    rhs.entry(i, j)
                ));
            }
        }
        None
    }

    fn equal(&self, tag: RelationTag, colors: Vec<Color>, lhs: Mat, rhs: Mat) -> RelationReport {
        let diff = lhs.sub(&rhs);
        let holds = diff.is_zero();
        let witness = if holds {
            None
        } else {
            self.witness(&diff, &lhs, &rhs)
        };
        RelationReport {
            tag,
            colors,
            holds,
            witness,
        }
    }

    /// The Serre relation for a family of raising or lowering
    /// operators: distant pairs commute, adjacent pairs satisfy the
    /// double bracket.
    fn serre(&self, tag: RelationTag, mats: &[Mat]) -> Vec<RelationReport> {
        let n = mats.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let zero = Mat::zero(self.mu.ideals.len());
                let lhs = if self.p.diagram().adjacent(Color(i), Color(j)) {
                    mats[i].commutator(&mats[i].commutator(&mats[j]))
                } else {
                    mats[i].commutator(&mats[j])
                };
                out.push(self.equal(tag, vec![Color(i), Color(j)], lhs, zero));
            }
        }
        out
    }

    fn borel_reports(&self) -> Vec<RelationReport> {
        let n = self.x.len();
        let dim = self.mu.ideals.len();
        let mut out = self.serre(RelationTag::Xx, &self.x);
        for i in 0..n {
            out.push(self.equal(
                RelationTag::XSquared,
                vec![Color(i)],
                self.x[i].mul(&self.x[i]),
                Mat::zero(dim),
            ));
        }
        for i in 0..n {
            for j in i + 1..n {
                out.push(self.equal(
                    RelationTag::Hh,
                    vec![Color(i), Color(j)],
                    self.h[i].commutator(&self.h[j]),
                    Mat::zero(dim),
                ));
            }
        }
        for j in 0..n {
            for i in 0..n {
                let theta = self.p.diagram().gcm().entry(Color(i), Color(j));
                out.push(self.equal(
                    RelationTag::Hx,
                    vec![Color(j), Color(i)],
                    self.h[j].commutator(&self.x[i]),
                    self.x[i].scaled(theta),
                ));
            }
        }
        out
    }

    fn eigen_range(&self, upper: Option<i64>) -> Vec<RelationReport> {
        let mut out = Vec::new();
        for c in 0..self.x.len() {
            let mut witness = None;
            for (j, &ideal) in self.mu.ideals.iter().enumerate() {
                let eig = self.mu.values[j][c];
                if eig < -1 || upper.is_some_and(|u| eig > u) {
                    witness = Some(format!(
                        "eigenvalue {} at {}",
                        eig,
                        self.p.ideal_name(ideal)
                    ));
                    break;
                }
            }
            out.push(RelationReport {
                tag: RelationTag::EigenRange,
                colors: vec![Color(c)],
                holds: witness.is_none(),
                witness,
            });
        }
        out
    }

    fn min_iff_raise(&self) -> Vec<RelationReport> {
        let mut out = Vec::new();
        for c in 0..self.x.len() {
            let color = Color(c);
            let mut witness = None;
            for (j, &ideal) in self.mu.ideals.iter().enumerate() {
                let minimal = self.mu.values[j][c] == -1;
                let raises = !raise_terms(self.p, ideal, color).is_empty();
                if minimal != raises {
                    witness = Some(format!(
                        "at {}: eigenvalue {} but the raise {}",
                        self.p.ideal_name(ideal),
                        self.mu.values[j][c],
                        if raises { "is nonzero" } else { "vanishes" }
                    ));
                    break;
                }
            }
            out.push(RelationReport {
                tag: RelationTag::MinIffRaise,
                colors: vec![color],
                holds: witness.is_none(),
                witness,
            });
        }
        out
    }
}

/// The raising half: Serre relations among the X operators, square
/// vanishing, diagonal commutation, the bracket of each H with each X,
/// the eigenvalue floor, and the minimality criterion.
pub fn verify_borel(
    p: &ColoredPoset,
    mu: &MuTable,
    force: bool,
) -> Result<Vec<RelationReport>, Error> {
    let checker = RelationChecker::new(p, mu, force)?;
    let mut out = checker.borel_reports();
    out.extend(checker.eigen_range(None));
    out.extend(checker.min_iff_raise());
    Ok(out)
}

/// The full set: everything in the raising half plus the lowering
/// Serre relations, the H/Y brackets, the X/Y brackets against the
/// diagonal, and the two-sided eigenvalue range.
pub fn verify_kacmoody(
    p: &ColoredPoset,
    mu: &MuTable,
    force: bool,
) -> Result<Vec<RelationReport>, Error> {
    let checker = RelationChecker::new(p, mu, force)?;
    let n = checker.x.len();
    let dim = mu.ideals.len();
    let mut out = checker.borel_reports();
    out.extend(checker.serre(RelationTag::Yy, &checker.y));
    for j in 0..n {
        for i in 0..n {
            let theta = p.diagram().gcm().entry(Color(i), Color(j));
            out.push(checker.equal(
                RelationTag::Hy,
                vec![Color(j), Color(i)],
                checker.h[j].commutator(&checker.y[i]),
                checker.y[i].scaled(-theta),
            ));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let rhs = if i == j {
                checker.h[i].clone()
            } else {
                Mat::zero(dim)
            };
            out.push(checker.equal(
                RelationTag::Xy,
                vec![Color(i), Color(j)],
                checker.x[i].commutator(&checker.y[j]),
                rhs,
            ));
        }
    }
    out.extend(checker.eigen_range(Some(1)));
    out.extend(checker.min_iff_raise());
    Ok(out)
}

/// Coordinates over the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        format!("({})", parts.join(", "))
    }
}

pub fn weight(mu: &MuTable, ideal: Ideal) -> Weight {
    Weight(mu.row(ideal).to_vec())
}

pub fn highest_weight(p: &ColoredPoset, mu: &MuTable) -> Weight {
    weight(mu, p.full_ideal())
}

/// Count chains I_1 ⊆ I_2 ⊆ … ⊆ I_m of ideals, with repeats allowed.
pub fn count_multichains(p: &ColoredPoset, m: usize) -> Result<u128, Error> {
    if m == 0 {
        return Err(Error::input("the chain length must be at least 1"));
    }
    let ideals = p.enumerate_ideals()?;
    let n = ideals.len();
    let mut counts = vec![1u128; n];
    for _ in 1..m {
        let mut next = vec![0u128; n];
        for (i, &big) in ideals.iter().enumerate() {
            for (j, &small) in ideals.iter().enumerate() {
                if small.is_subset(&big) {
                    next[i] = next[i]
                        .checked_add(counts[j])
                        .ok_or_else(|| Error::TooLarge("multichain count overflow".into()))?;
                }
            }
        }
        counts = next;
    }
    counts
        .iter()
        .try_fold(0u128, |acc, &c| acc.checked_add(c))
        .ok_or_else(|| Error::TooLarge("multichain count overflow".into()))
}

/// The downward basis: the same construction run on the order dual,
/// descending from the full multiset by lowering operators. Entries
/// correspond to flags of filters; the count is the dimension of the
/// symmetric power module, which equals the multichain count.
#[derive(Debug, Clone)]
pub struct SeshadriBasis {
    pub m: usize,
    pub dual: ColoredPoset,
    pub basis: StackwiseBasis,
}

impl SeshadriBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Weight of one downward entry: each filter flag component F
    /// contributes the row of its complementary ideal P − F.
    pub fn entry_weight(
        &self,
        p: &ColoredPoset,
        mu: &MuTable,
        flag: &crate::mvector::MFlag,
    ) -> Weight {
        let full = p.full_ideal();
        let n = p.diagram().len();
        let mut coords = vec![0i64; n];
        for &filter in flag.ideals() {
            for (i, v) in mu.row(filter.complement_in(full)).iter().enumerate() {
                coords[i] += v;
            }
        }
        Weight(coords)
    }
}

pub fn seshadri_basis(p: &ColoredPoset, m: usize) -> Result<SeshadriBasis, Error> {
    let class = p.classify().class;
    if class != PosetClass::Minuscule {
        return Err(Error::input(format!(
            "the downward basis needs a minuscule poset, got {class}"
        )));
    }
    let dual = p.dual();
    let basis = match build_basis(&dual, dual.default_extension(), m)? {
        BasisOutcome::Basis(b) => b,
        BasisOutcome::Dependent(_) => {
            return Err(Error::Inconsistent(
                "the dual of a minuscule poset cannot carry a dependence".to_string(),
            ))
        }
    };
    let expected = count_multichains(p, m)?;
    if basis.len() as u128 != expected {
        return Err(Error::Inconsistent(format!(
            "downward basis has {} entries but the lattice has {} multichains",
            basis.len(),
            expected
        )));
    }
    Ok(SeshadriBasis { m, dual, basis })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X(Color),
    Y(Color),
    H(Color),
}

/// One Lie algebra generator acting slot by slot; H is diagonal with
/// the summed eigenvalues of the slots.
pub fn sym_power_action<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    mu: &MuTable,
    v: &Vector<K>,
    generator: Generator,
) -> Vector<K> {
    let mut out = Vector::zero(v.m());
    for (key, coeff) in v.iter() {
        match generator {
            Generator::X(c) => {
                for slot in 0..v.m() {
                    for bigger in raise_terms(p, key.ideals()[slot], c) {
                        out.add_term(key.replace(slot, bigger, ext), coeff.clone());
                    }
                }
            }
            Generator::Y(c) => {
                for slot in 0..v.m() {
                    for smaller in lower_terms(p, key.ideals()[slot], c) {
                        out.add_term(key.replace(slot, smaller, ext), coeff.clone());
                    }
                }
            }
            Generator::H(c) => {
                let total: i64 = key.ideals().iter().map(|&i| mu.value(i, c)).sum();
                if total != 0 {
                    out.add_term(key.clone(), coeff * BigRational::from_integer(total.into()));
                }
            }
        }
    }
    out
}
