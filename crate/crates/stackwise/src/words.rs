//! Divided-power words and the total order used to compare them.
//!
//! A word is a sequence of color groups ⟨c_k^{n_k}, ..., c_1^{n_1}⟩,
//! applied rightmost group first. Storage is in application order:
//! `groups()[0]` is the rightmost group. Words attached to bounded
//! order-reversing maps (stackwise words) play the role of a basis
//! index; `classify_case` predicts how one extra leading group acts.

use crate::diagram::Color;
use crate::error::Error;
use crate::mvector::{flag_to_ppartition, gravity_cmp_ideals, MFlag, MMultiset, PPartition};
use crate::poset::{ColoredPoset, Elem, Ideal, LinearExtension};
use num_bigint::BigInt;
use num_integer::binomial;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    groups: Vec<(Color, u32)>,
}

impl Word {
    /// Build from groups in application order (rightmost first),
    /// dropping empty groups.
    pub fn new(groups: Vec<(Color, u32)>) -> Word {
        Word {
            groups: groups.into_iter().filter(|&(_, n)| n > 0).collect(),
        }
    }

    pub fn empty() -> Word {
        Word { groups: Vec::new() }
    }

    /// Parse display order: leftmost group first, `c^4` or bare `c`.
    pub fn parse(p: &ColoredPoset, s: &str) -> Result<Word, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let mut groups = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (name, mult) = match token.split_once('^') {
                None => (token, 1),
                Some((name, m)) => {
                    let m: u32 = m
                        .trim()
                        .parse()
                        .map_err(|_| Error::input(format!("bad multiplicity in {token}")))?;
                    (name.trim(), m)
                }
            };
            let color = p
                .diagram()
                .color(name)
                .ok_or_else(|| Error::input(format!("unknown color {name}")))?;
            groups.push((color, mult));
        }
        groups.reverse();
        Ok(Word::new(groups))
    }

    /// Groups in application order (rightmost first).
    pub fn groups(&self) -> &[(Color, u32)] {
        &self.groups
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Total letter count.
    pub fn len(&self) -> usize {
        self.groups.iter().map(|&(_, n)| n as usize).sum()
    }

    /// Single letters in application order.
    pub fn letters(&self) -> impl Iterator<Item = Color> + '_ {
        self.groups
            .iter()
            .flat_map(|&(c, n)| std::iter::repeat_n(c, n as usize))
    }

    /// The same word with one more group prepended on the left
    /// (applied last).
    pub fn with_leading(&self, color: Color, mult: u32) -> Word {
        let mut groups = self.groups.clone();
        groups.push((color, mult));
        Word::new(groups)
    }

    /// Split off the leftmost group.
    pub fn split_leading(&self) -> Option<((Color, u32), Word)> {
        let mut groups = self.groups.clone();
        let leading = groups.pop()?;
        Some((leading, Word { groups }))
    }

    /// Regroup the letter sequence into maximal same-color runs.
    pub fn canonical_groups(&self) -> Vec<(Color, u32)> {
        let mut runs: Vec<(Color, u32)> = Vec::new();
        for c in self.letters() {
            match runs.last_mut() {
                Some((rc, n)) if *rc == c => *n += 1,
                _ => runs.push((c, 1)),
            }
        }
        runs
    }

    pub fn render(&self, p: &ColoredPoset) -> String {
        let parts: Vec<String> = self
            .groups
            .iter()
            .rev()
            .map(|&(c, n)| {
                let name = p.diagram().name(c);
                if n == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{n}")
                }
            })
            .collect();
        parts.join(",")
    }
}

/// A letter position after growth: either the element the letter added
/// or, past the growing prefix, the untouched color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grown {
    Added(Elem),
    Stuck(Color),
}

/// The minimal-slot growth of a word on the all-empty multiset.
#[derive(Debug, Clone)]
pub struct GrowthRecord {
    /// How many letters, from the right, grew before the first vanish.
    pub prefix_len: usize,
    pub total_len: usize,
    /// The multiset reached by the grown prefix.
    pub multiset: MMultiset,
    /// One entry per letter, in application order.
    pub replaced: Vec<Grown>,
}

impl GrowthRecord {
    pub fn grew_fully(&self) -> bool {
        self.prefix_len == self.total_len
    }

    /// Display order (leftmost letter first).
    pub fn render_replaced(&self, p: &ColoredPoset) -> String {
        let parts: Vec<String> = self
            .replaced
            .iter()
            .rev()
            .map(|g| match g {
                Grown::Added(e) => p.name(*e).to_string(),
                Grown::Stuck(c) => p.diagram().name(*c).to_string(),
            })
            .collect();
        parts.join(",")
    }
}

/// Apply each letter to the gravity-least slot that accepts it; stop at
/// the first letter no slot accepts.
pub fn grows_well(p: &ColoredPoset, ext: &LinearExtension, m: usize, word: &Word) -> GrowthRecord {
    let mut slots = vec![Ideal::EMPTY; m];
    let mut replaced = Vec::new();
    let mut prefix_len = 0;
    let mut alive = true;
    for color in word.letters() {
        if alive {
            let grown = slots.iter().enumerate().find_map(|(g, &ideal)| {
                p.addable(ideal)
                    .find(|&e| p.color_of(e) == color)
                    .map(|e| (g, e))
            });
            match grown {
                Some((g, e)) => {
                    slots[g] = slots[g].with(e);
                    slots.sort_by(|a, b| gravity_cmp_ideals(ext, a, b));
                    replaced.push(Grown::Added(e));
                    prefix_len += 1;
                    continue;
                }
                None => alive = false,
            }
        }
        replaced.push(Grown::Stuck(color));
    }
    GrowthRecord {
        prefix_len,
        total_len: word.len(),
        multiset: MMultiset::new(slots, ext),
        replaced,
    }
}

/// The total order on words: shorter first; same length compares the
/// grown letter sequences from the right, with every poset element
/// above every color, elements ordered by the extension and colors by
/// the diagram order.
pub fn word_cmp(p: &ColoredPoset, ext: &LinearExtension, m: usize, a: &Word, b: &Word) -> Ordering {
    match a.len().cmp(&b.len()) {
        Ordering::Equal => {}
        other => return other,
    }
    let ga = grows_well(p, ext, m, a);
    let gb = grows_well(p, ext, m, b);
    for (x, y) in ga.replaced.iter().zip(gb.replaced.iter()) {
        let ord = match (x, y) {
            (Grown::Stuck(cx), Grown::Stuck(cy)) => cx.cmp(cy),
            (Grown::Stuck(_), Grown::Added(_)) => Ordering::Less,
            (Grown::Added(_), Grown::Stuck(_)) => Ordering::Greater,
            (Grown::Added(ex), Grown::Added(ey)) => ext.position(*ex).cmp(&ext.position(*ey)),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

/// The word of a flag: one group per element with a positive count,
/// in extension order.
pub fn stackwise_word(p: &ColoredPoset, ext: &LinearExtension, flag: &MFlag) -> Word {
    let psi = flag_to_ppartition(p, flag);
    stackwise_word_of(p, ext, &psi)
}

fn stackwise_word_of(p: &ColoredPoset, ext: &LinearExtension, psi: &PPartition) -> Word {
    let groups = ext
        .order()
        .iter()
        .filter(|&&e| psi.value(e) > 0)
        .map(|&e| (p.color_of(e), psi.value(e)))
        .collect();
    Word::new(groups)
}

/// Decide whether the letter sequence is the word of some flag bounded
/// by m, and recover the flag. Maximal same-color runs are matched
/// greedily to elements along the extension, which is forced when
/// equal colors are comparable; the candidate's word is recomputed and
/// compared, so a failed match returns None rather than a wrong flag.
pub fn is_stackwise(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    word: &Word,
) -> Option<MFlag> {
    let runs = word.canonical_groups();
    let mut values = vec![0u32; p.len()];
    let mut r = 0;
    for &e in ext.order() {
        if r < runs.len() && p.color_of(e) == runs[r].0 {
            values[e.0] = runs[r].1;
            r += 1;
        }
    }
    if r < runs.len() {
        return None;
    }
    let psi = PPartition::new(p, values, m as u32).ok()?;
    if stackwise_word_of(p, ext, &psi).canonical_groups() != runs {
        return None;
    }
    Some(crate::mvector::ppartition_to_flag(p, &psi))
}

/// Split a word as one leading group over a canonically grouped
/// stackwise tail.
pub fn is_augmented(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    word: &Word,
) -> Option<(Color, u32, MFlag)> {
    let ((color, mult), tail) = word.split_leading()?;
    let flag = is_stackwise(p, ext, m, &tail)?;
    // the tail must already be grouped element by element
    if stackwise_word(p, ext, &flag).groups() != tail.groups() {
        return None;
    }
    Some((color, mult, flag))
}

/// The six outcomes for one divided-power group acting on a stackwise
/// vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordCase {
    /// The color is not carried by any minimal element, or the power
    /// exceeds the slot count: the action vanishes.
    ZeroNoMinimal,
    /// On the all-empty flag: binomial(m, q) times the multiset with q
    /// copies of the principal ideal of the minimal element.
    Minimal { element: Elem, coefficient: BigInt },
    /// Same color as the last group and the merged power overflows m:
    /// the action vanishes.
    ZeroOverflow,
    /// Same color as the last group, merged word still stackwise:
    /// binomial(q + n, q) times the merged stackwise vector.
    Glued { flag: MFlag, coefficient: BigInt },
    /// Different color, combined word still stackwise: exactly that
    /// stackwise vector.
    Stackwise { flag: MFlag },
    /// Otherwise: an integral combination of strictly smaller words.
    Lower,
}

impl WordCase {
    pub fn label(&self) -> &'static str {
        match self {
            WordCase::ZeroNoMinimal => "a",
            WordCase::Minimal { .. } => "b",
            WordCase::ZeroOverflow => "c",
            WordCase::Glued { .. } => "d-i",
            WordCase::Stackwise { .. } => "d-ii",
            WordCase::Lower => "e",
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, WordCase::ZeroNoMinimal | WordCase::ZeroOverflow)
    }
}

/// Predict the action of an augmented stackwise word on the all-empty
/// multiset without expanding it.
pub fn classify_case(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    word: &Word,
) -> Result<WordCase, Error> {
    let (color, q, tail_flag) = is_augmented(p, ext, m, word)
        .ok_or_else(|| Error::input("word is not in augmented stackwise form".to_string()))?;
    let psi = flag_to_ppartition(p, &tail_flag);
    let last_positive = ext
        .order()
        .iter()
        .rev()
        .find(|&&e| psi.value(e) > 0)
        .copied();

    let Some(x_i) = last_positive else {
        // bare group on the empty flag
        let z = p.minimal_elements().find(|&e| p.color_of(e) == color);
        return Ok(match z {
            Some(z) if q as usize <= m => WordCase::Minimal {
                element: z,
                coefficient: binomial(BigInt::from(m), BigInt::from(q)),
            },
            _ => WordCase::ZeroNoMinimal,
        });
    };

    let a_i = p.color_of(x_i);
    let n_i = psi.value(x_i);
    if color == a_i {
        if q + n_i > m as u32 {
            return Ok(WordCase::ZeroOverflow);
        }
        let mut values = psi.values().to_vec();
        values[x_i.0] = q + n_i;
        if let Ok(merged) = PPartition::new(p, values, m as u32) {
            let flag = crate::mvector::ppartition_to_flag(p, &merged);
            return Ok(WordCase::Glued {
                flag,
                coefficient: binomial(BigInt::from(q + n_i), BigInt::from(q)),
            });
        }
        return Ok(WordCase::Lower);
    }
    let combined = word.clone();
    if let Some(flag) = is_stackwise(p, ext, m, &combined) {
        return Ok(WordCase::Stackwise { flag });
    }
    Ok(WordCase::Lower)
}
