//! The distributive lattice of order ideals, with color-indexed
//! raising and lowering along its cover edges.

use crate::diagram::Color;
use crate::error::Error;
use crate::poset::{ColoredPoset, Elem, Ideal};
use std::collections::HashMap;

/// All ways to grow the ideal by one element of the given color.
pub fn raise_terms(p: &ColoredPoset, ideal: Ideal, color: Color) -> Vec<Ideal> {
    p.addable(ideal)
        .filter(|&e| p.color_of(e) == color)
        .map(|e| ideal.with(e))
        .collect()
}

/// All ways to shrink the ideal by one element of the given color.
pub fn lower_terms(p: &ColoredPoset, ideal: Ideal, color: Color) -> Vec<Ideal> {
    p.removable(ideal)
        .filter(|&e| p.color_of(e) == color)
        .map(|e| ideal.without(e))
        .collect()
}

/// Add the unique minimal element of the complement with this color,
/// or return None when there is none. Several candidates mean the
/// single-term contract is void.
pub fn raise(p: &ColoredPoset, ideal: Ideal, color: Color) -> Result<Option<Ideal>, Error> {
    let mut terms = raise_terms(p, ideal, color);
    if terms.len() > 1 {
        return Err(Error::EcViolated(format!(
            "{} elements of color {} can extend {}",
            terms.len(),
            p.diagram().name(color),
            p.ideal_name(ideal)
        )));
    }
    Ok(terms.pop())
}

/// Remove the unique maximal element of the ideal with this color,
/// or return None when there is none.
pub fn lower(p: &ColoredPoset, ideal: Ideal, color: Color) -> Result<Option<Ideal>, Error> {
    let mut terms = lower_terms(p, ideal, color);
    if terms.len() > 1 {
        return Err(Error::EcViolated(format!(
            "{} elements of color {} can be removed from {}",
            terms.len(),
            p.diagram().name(color),
            p.ideal_name(ideal)
        )));
    }
    Ok(terms.pop())
}

/// The full ideal lattice, materialized. Nodes sit in the order of
/// `enumerate_ideals`; each edge records the element it adds.
pub struct SplitLattice {
    ideals: Vec<Ideal>,
    index: HashMap<Ideal, usize>,
    up: Vec<Vec<(Elem, usize)>>,
    down: Vec<Vec<(Elem, usize)>>,
}

pub fn build_lattice(p: &ColoredPoset) -> Result<SplitLattice, Error> {
    let ideals = p.enumerate_ideals()?;
    let index: HashMap<Ideal, usize> = ideals.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut up = vec![Vec::new(); ideals.len()];
    let mut down = vec![Vec::new(); ideals.len()];
    for (i, &ideal) in ideals.iter().enumerate() {
        for e in p.addable(ideal) {
            let j = index[&ideal.with(e)];
            up[i].push((e, j));
            down[j].push((e, i));
        }
    }
    for edges in up.iter_mut().chain(down.iter_mut()) {
        edges.sort();
    }
    Ok(SplitLattice {
        ideals,
        index,
        up,
        down,
    })
}

impl SplitLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn index_of(&self, ideal: Ideal) -> Option<usize> {
        self.index.get(&ideal).copied()
    }

    /// Cover edges out of node i, each labeled by the added element.
    pub fn up_edges(&self, i: usize) -> &[(Elem, usize)] {
        &self.up[i]
    }

    pub fn down_edges(&self, i: usize) -> &[(Elem, usize)] {
        &self.down[i]
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(|v| v.len()).sum()
    }

    /// One line per cover edge, grouped by source node:
    /// `vw -c-> vwx`, with the empty ideal rendered as its sign.
    pub fn dump(&self, p: &ColoredPoset) -> String {
        let mut out = String::new();
        for (i, &src) in self.ideals.iter().enumerate() {
            for &(e, j) in &self.up[i] {
                out.push_str(&format!(
                    "{} -{}-> {}\n",
                    p.ideal_name(src),
                    p.diagram().name(p.color_of(e)),
                    p.ideal_name(self.ideals[j])
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DynkinDiagram;
    use crate::poset::{chain, figure31, rectangle};

    fn ideal(p: &ColoredPoset, names: &str) -> Ideal {
        if names == "∅" {
            return Ideal::EMPTY;
        }
        Ideal::from_elems(names.chars().map(|c| p.elem(&c.to_string()).unwrap()))
    }

    fn color(p: &ColoredPoset, name: &str) -> Color {
        p.diagram().color(name).unwrap()
    }

    #[test]
    fn raise_examples() {
        let p = figure31();
        assert_eq!(
            raise(&p, Ideal::EMPTY, color(&p, "a")).unwrap(),
            Some(ideal(&p, "v"))
        );
        assert_eq!(
            raise(&p, ideal(&p, "vwxy"), color(&p, "c")).unwrap(),
            Some(ideal(&p, "vwxyz"))
        );
        assert_eq!(raise(&p, ideal(&p, "v"), color(&p, "a")).unwrap(), None);
    }

    #[test]
    fn lower_examples() {
        let p = figure31();
        assert_eq!(
            lower(&p, ideal(&p, "vwxyz"), color(&p, "c")).unwrap(),
            Some(ideal(&p, "vwxy"))
        );
        assert_eq!(lower(&p, Ideal::EMPTY, color(&p, "a")).unwrap(), None);
        assert_eq!(
            lower(&p, ideal(&p, "vw"), color(&p, "c")).unwrap(),
            Some(ideal(&p, "v"))
        );
    }

    #[test]
    fn raise_errors_on_two_candidates() {
        let diagram = DynkinDiagram::new(&["a", "b"], &[("a", "b")]).unwrap();
        let p = ColoredPoset::new(
            diagram,
            &[("u", "a"), ("x", "b"), ("y", "b")],
            &[("u", "x"), ("u", "y")],
        )
        .unwrap();
        let u = ideal(&p, "u");
        assert_eq!(raise_terms(&p, u, color(&p, "b")).len(), 2);
        assert!(matches!(
            raise(&p, u, color(&p, "b")),
            Err(Error::EcViolated(_))
        ));
        let top = p.full_ideal();
        assert!(matches!(
            lower(&p, top, color(&p, "b")),
            Err(Error::EcViolated(_))
        ));
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(build_lattice(&figure31()).unwrap().len(), 9);
        for n in 1..=5 {
            assert_eq!(build_lattice(&chain(n).unwrap()).unwrap().len(), n + 1);
        }
        assert_eq!(build_lattice(&rectangle(2, 2).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn figure31_dump_frozen() {
        let p = figure31();
        let l = build_lattice(&p).unwrap();
        assert_eq!(l.edge_count(), 11);
        let expected = "\
∅ -a-> v
∅ -c-> w
v -c-> vw
w -a-> vw
w -d-> wy
vw -b-> vwx
vw -d-> vwy
wy -a-> vwy
vwx -d-> vwxy
vwy -b-> vwxy
vwxy -c-> vwxyz
";
        assert_eq!(l.dump(&p), expected);
    }

    #[test]
    fn edges_invert() {
        for p in [figure31(), chain(3).unwrap(), rectangle(2, 2).unwrap()] {
            let l = build_lattice(&p).unwrap();
            for (i, &src) in l.ideals().iter().enumerate() {
                for &(e, j) in l.up_edges(i) {
                    let c = p.color_of(e);
                    let dst = l.ideals()[j];
                    assert_eq!(raise(&p, src, c).unwrap(), Some(dst));
                    assert_eq!(lower(&p, dst, c).unwrap(), Some(src));
                }
            }
            // unique bottom and top
            assert_eq!(l.ideals()[0], Ideal::EMPTY);
            assert_eq!(l.ideals()[l.len() - 1], p.full_ideal());
        }
    }
}
