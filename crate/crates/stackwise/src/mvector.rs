//! Linear combinations of ideal multisets (or tuples), acted on by
//! color-indexed raising operators and their divided powers.
//!
//! Coefficients are exact rationals. Multisets are kept sorted by the
//! gravity order for a fixed linear extension: ideals with more
//! elements sort first, ties lexicographically along the extension.

use crate::diagram::Color;
use crate::error::Error;
use crate::lattice::raise_terms;
use crate::poset::{cmp_ext_lex, ColoredPoset, Elem, Ideal, LinearExtension};
use crate::words::Word;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;

/// Heavier ideals (more elements) sort first; ties compare element
/// lists lexicographically along the extension.
pub fn gravity_cmp_ideals(ext: &LinearExtension, a: &Ideal, b: &Ideal) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| cmp_ext_lex(ext, a, b))
}

/// Multisets with a larger total element count sort first; ties compare
/// the gravity-sorted ideal lists entrywise.
pub fn gravity_cmp_multisets(ext: &LinearExtension, a: &[Ideal], b: &[Ideal]) -> Ordering {
    let ta: usize = a.iter().map(Ideal::len).sum();
    let tb: usize = b.iter().map(Ideal::len).sum();
    tb.cmp(&ta).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()) {
            match gravity_cmp_ideals(ext, x, y) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        a.len().cmp(&b.len())
    })
}

/// Slot storage shared by multisets and tuples: a fixed number of
/// ideals with a rule for rebuilding after one slot changes.
pub trait Slots: Clone + Eq + Hash {
    fn ideals(&self) -> &[Ideal];
    fn replace(&self, slot: usize, ideal: Ideal, ext: &LinearExtension) -> Self;
    fn render(&self, p: &ColoredPoset, ext: &LinearExtension) -> String;
}

/// An unordered m-multiset of ideals, stored gravity-sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MMultiset {
    ideals: Vec<Ideal>,
}

impl MMultiset {
    pub fn new(mut ideals: Vec<Ideal>, ext: &LinearExtension) -> MMultiset {
        ideals.sort_by(|a, b| gravity_cmp_ideals(ext, a, b));
        MMultiset { ideals }
    }

    pub fn empty(m: usize) -> MMultiset {
        MMultiset {
            ideals: vec![Ideal::EMPTY; m],
        }
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// True when the ideals form a weakly decreasing containment chain.
    pub fn is_chain(&self) -> bool {
        self.ideals.windows(2).all(|w| w[1].is_subset(&w[0]))
    }
}

impl Slots for MMultiset {
    fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    fn replace(&self, slot: usize, ideal: Ideal, ext: &LinearExtension) -> Self {
        let mut ideals = self.ideals.clone();
        ideals[slot] = ideal;
        ideals.sort_by(|a, b| gravity_cmp_ideals(ext, a, b));
        MMultiset { ideals }
    }

    fn render(&self, p: &ColoredPoset, ext: &LinearExtension) -> String {
        let parts: Vec<String> = self
            .ideals
            .iter()
            .map(|&i| p.ideal_name_with(ext, i))
            .collect();
        format!("{{{}}}", parts.join("; "))
    }
}

/// An ordered m-tuple of ideals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MTuple {
    ideals: Vec<Ideal>,
}

impl MTuple {
    pub fn new(ideals: Vec<Ideal>) -> MTuple {
        MTuple { ideals }
    }

    pub fn empty(m: usize) -> MTuple {
        MTuple {
            ideals: vec![Ideal::EMPTY; m],
        }
    }

    pub fn sorted(&self, ext: &LinearExtension) -> MMultiset {
        MMultiset::new(self.ideals.clone(), ext)
    }
}

impl Slots for MTuple {
    fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    fn replace(&self, slot: usize, ideal: Ideal, _ext: &LinearExtension) -> Self {
        let mut ideals = self.ideals.clone();
        ideals[slot] = ideal;
        MTuple { ideals }
    }

    fn render(&self, p: &ColoredPoset, ext: &LinearExtension) -> String {
        let parts: Vec<String> = self
            .ideals
            .iter()
            .map(|&i| p.ideal_name_with(ext, i))
            .collect();
        format!("({})", parts.join("; "))
    }
}

/// A formal rational combination of m-multisets or m-tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector<K: Slots> {
    m: usize,
    terms: HashMap<K, BigRational>,
}

pub type MVector = Vector<MMultiset>;
pub type TupleVector = Vector<MTuple>;

impl<K: Slots> Vector<K> {
    pub fn zero(m: usize) -> Self {
        Vector {
            m,
            terms: HashMap::new(),
        }
    }

    pub fn unit(key: K) -> Self {
        let m = key.ideals().len();
        let mut terms = HashMap::new();
        terms.insert(key, BigRational::one());
        Vector { m, terms }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> BigRational {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: K, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(key.ideals().len(), self.m);
        let entry = self.terms.entry(key);
        match entry {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Vector::zero(self.m);
        }
        Vector {
            m: self.m,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl MVector {
    /// The gravity-least term and its coefficient.
    pub fn leading_term(&self, ext: &LinearExtension) -> Option<(&MMultiset, &BigRational)> {
        self.terms
            .iter()
            .min_by(|(a, _), (b, _)| gravity_cmp_multisets(ext, a.ideals(), b.ideals()))
    }

    /// Terms sorted ascending by multiset gravity.
    pub fn sorted_terms(&self, ext: &LinearExtension) -> Vec<(&MMultiset, &BigRational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| gravity_cmp_multisets(ext, a.ideals(), b.ideals()));
        terms
    }

    pub fn render(&self, p: &ColoredPoset, ext: &LinearExtension) -> String {
        render_terms(self.sorted_terms(ext), p, ext)
    }
}

impl TupleVector {
    /// Forget slot order: merge tuples into multisets.
    pub fn into_multisets(&self, ext: &LinearExtension) -> MVector {
        let mut out = MVector::zero(self.m);
        for (k, c) in &self.terms {
            out.add_term(k.sorted(ext), c.clone());
        }
        out
    }

    pub fn sorted_terms(&self, ext: &LinearExtension) -> Vec<(&MTuple, &BigRational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            gravity_cmp_multisets(ext, a.ideals(), b.ideals()).then_with(|| {
                for (x, y) in a.ideals().iter().zip(b.ideals()) {
                    match gravity_cmp_ideals(ext, x, y) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                Ordering::Equal
            })
        });
        terms
    }

    pub fn render(&self, p: &ColoredPoset, ext: &LinearExtension) -> String {
        render_terms(self.sorted_terms(ext), p, ext)
    }
}

fn render_terms<K: Slots>(
    terms: Vec<(&K, &BigRational)>,
    p: &ColoredPoset,
    ext: &LinearExtension,
) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (key, coeff)) in terms.iter().enumerate() {
        let mag = render_coeff(&coeff.abs());
        if i == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&mag);
        out.push_str(&key.render(p, ext));
    }
    out
}

pub fn render_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// The raising operator for one color: acts slot by slot, summing over
/// every admissible extension of the slot's ideal. Several extensions
/// of one slot only occur when the poset violates EC.
pub(crate) fn act_color_sum<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    v: &Vector<K>,
    color: Color,
) -> Vector<K> {
    let mut out = Vector::zero(v.m());
    for (key, coeff) in v.iter() {
        for slot in 0..v.m() {
            for bigger in raise_terms(p, key.ideals()[slot], color) {
                out.add_term(key.replace(slot, bigger, ext), coeff.clone());
            }
        }
    }
    out
}

/// The raising operator under the single-term contract: errors if any
/// slot admits several extensions of the same color.
pub fn act_color<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    v: &Vector<K>,
    color: Color,
) -> Result<Vector<K>, Error> {
    let mut out = Vector::zero(v.m());
    for (key, coeff) in v.iter() {
        for slot in 0..v.m() {
            let terms = raise_terms(p, key.ideals()[slot], color);
            if terms.len() > 1 {
                return Err(Error::EcViolated(format!(
                    "{} elements of color {} can extend {}",
                    terms.len(),
                    p.diagram().name(color),
                    p.ideal_name_with(ext, key.ideals()[slot])
                )));
            }
            for bigger in terms {
                out.add_term(key.replace(slot, bigger, ext), coeff.clone());
            }
        }
    }
    Ok(out)
}

fn factorial(k: u32) -> BigRational {
    let mut f = BigInt::one();
    for i in 2..=k as u64 {
        f *= i;
    }
    BigRational::from_integer(f)
}

/// The k-th divided power of the raising operator: apply it k times and
/// divide by k!. k = 0 is the identity.
pub fn act_divided<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    v: &Vector<K>,
    color: Color,
    k: u32,
) -> Result<Vector<K>, Error> {
    let mut out = v.clone();
    for _ in 0..k {
        out = act_color(p, ext, &out, color)?;
        if out.is_zero() {
            return Ok(out);
        }
    }
    Ok(out.scaled(&factorial(k).recip()))
}

pub(crate) fn act_divided_sum<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    v: &Vector<K>,
    color: Color,
    k: u32,
) -> Vector<K> {
    let mut out = v.clone();
    for _ in 0..k {
        out = act_color_sum(p, ext, &out, color);
        if out.is_zero() {
            return out;
        }
    }
    out.scaled(&factorial(k).recip())
}

/// Apply a whole divided-power word, rightmost group first.
pub fn act_word<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    v: &Vector<K>,
    word: &Word,
) -> Result<Vector<K>, Error> {
    let mut out = v.clone();
    for &(color, mult) in word.groups() {
        out = act_divided(p, ext, &out, color, mult)?;
    }
    Ok(out)
}

/// Like `act_word`, returning the vector after each group.
pub fn act_word_steps<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    v: &Vector<K>,
    word: &Word,
) -> Result<Vec<Vector<K>>, Error> {
    let mut steps = Vec::new();
    let mut cur = v.clone();
    for &(color, mult) in word.groups() {
        cur = act_divided(p, ext, &cur, color, mult)?;
        steps.push(cur.clone());
    }
    Ok(steps)
}

/// Apply a whole divided-power word under the summing convention, so it
/// works on posets where a slot admits several same-colored extensions.
/// Agrees with `act_word` whenever that one succeeds.
pub fn act_word_sum<K: Slots>(
    p: &ColoredPoset,
    ext: &LinearExtension,
    v: &Vector<K>,
    word: &Word,
) -> Vector<K> {
    let mut out = v.clone();
    for &(color, mult) in word.groups() {
        out = act_divided_sum(p, ext, &out, color, mult);
    }
    out
}

/// An order-reversing map from elements to {0, ..., bound}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PPartition {
    values: Vec<u32>,
    bound: u32,
}

impl PPartition {
    pub fn new(p: &ColoredPoset, values: Vec<u32>, bound: u32) -> Result<PPartition, Error> {
        if values.len() != p.len() {
            return Err(Error::input("one value per element required"));
        }
        if let Some(v) = values.iter().find(|&&v| v > bound) {
            return Err(Error::input(format!("value {v} exceeds the bound {bound}")));
        }
        for &(x, y) in p.covers() {
            if values[x.0] < values[y.0] {
                return Err(Error::input(format!(
                    "not order-reversing: {} < {} at cover {}<{}",
                    values[x.0],
                    values[y.0],
                    p.name(x),
                    p.name(y)
                )));
            }
        }
        Ok(PPartition { values, bound })
    }

    pub fn value(&self, e: Elem) -> u32 {
        self.values[e.0]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }
}

/// A weakly decreasing chain of ideals I_1 ⊇ I_2 ⊇ ... ⊇ I_m.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MFlag {
    ideals: Vec<Ideal>,
}

impl MFlag {
    pub fn new(p: &ColoredPoset, ideals: Vec<Ideal>) -> Result<MFlag, Error> {
        if ideals.is_empty() {
            return Err(Error::input("a flag needs at least one component"));
        }
        for &i in &ideals {
            if !p.is_ideal(i) {
                return Err(Error::input(format!("{} is not an ideal", p.ideal_name(i))));
            }
        }
        for w in ideals.windows(2) {
            if !w[1].is_subset(&w[0]) {
                return Err(Error::input(format!(
                    "flag components must weakly decrease: {} ⊉ {}",
                    p.ideal_name(w[0]),
                    p.ideal_name(w[1])
                )));
            }
        }
        Ok(MFlag { ideals })
    }

    pub fn m(&self) -> usize {
        self.ideals.len()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    /// The flag as a multiset; containment makes it already
    /// gravity-sorted.
    pub fn multiset(&self) -> MMultiset {
        MMultiset {
            ideals: self.ideals.clone(),
        }
    }

    pub fn render(&self, p: &ColoredPoset, ext: &LinearExtension) -> String {
        let parts: Vec<String> = self
            .ideals
            .iter()
            .map(|&i| {
                if i.is_empty() {
                    "0".to_string()
                } else {
                    p.ideal_name_with(ext, i)
                }
            })
            .collect();
        format!("[{}]", parts.join(";"))
    }
}

/// Count, for each element, how many flag components contain it.
pub fn flag_to_ppartition(p: &ColoredPoset, flag: &MFlag) -> PPartition {
    let values = p
        .elements()
        .map(|e| flag.ideals().iter().filter(|i| i.contains(e)).count() as u32)
        .collect();
    PPartition {
        values,
        bound: flag.m() as u32,
    }
}

/// The k-th component collects the elements with value at least k.
pub fn ppartition_to_flag(p: &ColoredPoset, psi: &PPartition) -> MFlag {
    let ideals = (1..=psi.bound)
        .map(|k| Ideal::from_elems(p.elements().filter(|&e| psi.values[e.0] >= k)))
        .collect();
    MFlag { ideals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::figure31;
    use num_traits::ToPrimitive;

    fn ideal(p: &ColoredPoset, names: &str) -> Ideal {
        if names == "∅" {
            return Ideal::EMPTY;
        }
        Ideal::from_elems(names.chars().map(|c| p.elem(&c.to_string()).unwrap()))
    }

    fn color(p: &ColoredPoset, name: &str) -> Color {
        p.diagram().color(name).unwrap()
    }

    fn multiset(p: &ColoredPoset, parts: &[&str]) -> MMultiset {
        MMultiset::new(
            parts.iter().map(|s| ideal(p, s)).collect(),
            p.default_extension(),
        )
    }

    #[test]
    fn gravity_on_ideals() {
        let p = figure31();
        let ext = p.default_extension();
        let vw = ideal(&p, "vw");
        let wy = ideal(&p, "wy");
        let vwx = ideal(&p, "vwx");
        assert_eq!(gravity_cmp_ideals(ext, &vwx, &vw), Ordering::Less);
        assert_eq!(gravity_cmp_ideals(ext, &vw, &wy), Ordering::Less);
        assert_eq!(gravity_cmp_ideals(ext, &wy, &vw), Ordering::Greater);
        assert_eq!(gravity_cmp_ideals(ext, &vw, &vw), Ordering::Equal);
    }

    #[test]
    fn gravity_is_total_on_figure31() {
        let p = figure31();
        let ext = p.default_extension();
        let ideals = p.enumerate_ideals().unwrap();
        for a in &ideals {
            for b in &ideals {
                let ab = gravity_cmp_ideals(ext, a, b);
                let ba = gravity_cmp_ideals(ext, b, a);
                assert_eq!(ab, ba.reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                for c in &ideals {
                    if ab != Ordering::Greater && gravity_cmp_ideals(ext, b, c) != Ordering::Greater
                    {
                        assert_ne!(gravity_cmp_ideals(ext, a, c), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn gravity_on_multisets() {
        let p = figure31();
        let ext = p.default_extension();
        let heavy = multiset(&p, &["vwxy", "vw", "vw", "w"]);
        let mid = multiset(&p, &["vwx", "vwy", "vw", "w"]);
        let light = multiset(&p, &["vwx", "vw", "vw", "wy"]);
        assert_eq!(
            gravity_cmp_multisets(ext, heavy.ideals(), mid.ideals()),
            Ordering::Less
        );
        assert_eq!(
            gravity_cmp_multisets(ext, mid.ideals(), light.ideals()),
            Ordering::Less
        );
    }

    #[test]
    fn flag_roundtrip_example() {
        let p = figure31();
        let flag = MFlag::new(
            &p,
            vec![
                ideal(&p, "vwxy"),
                ideal(&p, "vw"),
                ideal(&p, "vw"),
                ideal(&p, "w"),
            ],
        )
        .unwrap();
        let psi = flag_to_ppartition(&p, &flag);
        let by_name: Vec<u32> = ["v", "w", "x", "y", "z"]
            .iter()
            .map(|n| psi.value(p.elem(n).unwrap()))
            .collect();
        assert_eq!(by_name, vec![3, 4, 1, 1, 0]);
        assert_eq!(ppartition_to_flag(&p, &psi), flag);
    }

    #[test]
    fn flag_and_ppartition_validation() {
        let p = figure31();
        // not an ideal
        assert!(MFlag::new(&p, vec![ideal(&p, "x")]).is_err());
        // not a chain
        assert!(MFlag::new(&p, vec![ideal(&p, "v"), ideal(&p, "w")]).is_err());
        // value above bound
        assert!(PPartition::new(&p, vec![3, 3, 0, 0, 0], 2).is_err());
        // increasing along a cover
        assert!(PPartition::new(&p, vec![0, 0, 1, 0, 0], 2).is_err());
    }

    #[test]
    fn act_color_counts_slots() {
        let p = figure31();
        let ext = p.default_extension();
        let start = MVector::unit(MMultiset::empty(4));
        let out = act_color(&p, ext, &start, color(&p, "a")).unwrap();
        assert_eq!(out.len(), 1);
        let key = multiset(&p, &["v", "∅", "∅", "∅"]);
        assert_eq!(out.coeff(&key).to_integer().to_i64(), Some(4));

        // a second v cannot be added anywhere
        let two = MVector::unit(multiset(&p, &["v", "v"]));
        assert!(act_color(&p, ext, &two, color(&p, "a")).unwrap().is_zero());
    }

    #[test]
    fn act_color_on_tuples() {
        let p = figure31();
        let ext = p.default_extension();
        let start = TupleVector::unit(MTuple::new(vec![ideal(&p, "v"), Ideal::EMPTY]));
        let out = act_color(&p, ext, &start, color(&p, "c")).unwrap();
        assert_eq!(out.len(), 2);
        assert!(out
            .coeff(&MTuple::new(vec![ideal(&p, "vw"), Ideal::EMPTY]))
            .is_one());
        assert!(out
            .coeff(&MTuple::new(vec![ideal(&p, "v"), ideal(&p, "w")]))
            .is_one());
    }

    #[test]
    fn divided_power_steps() {
        let p = figure31();
        let ext = p.default_extension();
        let start = MVector::unit(MMultiset::empty(4));
        let a3 = act_divided(&p, ext, &start, color(&p, "a"), 3).unwrap();
        assert_eq!(a3.len(), 1);
        assert_eq!(
            a3.coeff(&multiset(&p, &["v", "v", "v", "∅"]))
                .to_integer()
                .to_i64(),
            Some(4)
        );
        let c4 = act_divided(&p, ext, &a3, color(&p, "c"), 4).unwrap();
        assert_eq!(c4.len(), 1);
        assert_eq!(
            c4.coeff(&multiset(&p, &["vw", "vw", "vw", "w"]))
                .to_integer()
                .to_i64(),
            Some(4)
        );
        // zeroth power is the identity
        assert_eq!(act_divided(&p, ext, &c4, color(&p, "b"), 0).unwrap(), c4);
    }

    #[test]
    fn divided_power_binomial_coefficient() {
        let p = figure31();
        let ext = p.default_extension();
        // three equal ideals accept the color; choosing 2 of 3 slots
        let start = MVector::unit(multiset(&p, &["vw", "vw", "vw", "w"]));
        let out = act_divided(&p, ext, &start, color(&p, "b"), 2).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(
            out.coeff(&multiset(&p, &["vwx", "vwx", "vw", "w"]))
                .to_integer()
                .to_i64(),
            Some(3)
        );
    }

    #[test]
    fn word_action_frozen() {
        let p = figure31();
        let ext = p.default_extension();
        let word = Word::parse(&p, "d,c,d,b,c,a").unwrap();
        let start = MVector::unit(MMultiset::empty(2));
        let out = act_word(&p, ext, &start, &word).unwrap();
        assert_eq!(out.render(&p, ext), "2{vwxy; wy}");
    }

    #[test]
    fn word_action_steps_frozen() {
        let p = figure31();
        let ext = p.default_extension();
        let word = Word::parse(&p, "d^1,b^1,c^4,a^3").unwrap();
        let start = MVector::unit(MMultiset::empty(4));
        let steps = act_word_steps(&p, ext, &start, &word).unwrap();
        assert_eq!(steps.len(), 4);
        assert_eq!(steps[0].render(&p, ext), "4{v; v; v; ∅}");
        assert_eq!(steps[1].render(&p, ext), "4{vw; vw; vw; w}");
        assert_eq!(steps[2].render(&p, ext), "12{vwx; vw; vw; w}");
        assert_eq!(
            steps[3].render(&p, ext),
            "12{vwxy; vw; vw; w} + 24{vwx; vwy; vw; w} + 12{vwx; vw; vw; wy}"
        );
        for s in &steps {
            assert!(s.is_integral());
        }
    }

    #[test]
    fn tuple_and_multiset_actions_agree() {
        let p = figure31();
        let ext = p.default_extension();
        let word = Word::parse(&p, "d,c,b,c,a").unwrap();
        let tuples = act_word(&p, ext, &TupleVector::unit(MTuple::empty(3)), &word).unwrap();
        let multisets = act_word(&p, ext, &MVector::unit(MMultiset::empty(3)), &word).unwrap();
        assert_eq!(tuples.into_multisets(ext), multisets);
    }
}
