//! Colored posets: finite posets with a surjective coloring into a diagram.
//!
//! Elements are indexed in declaration order. Order ideals are bitmasks,
//! which caps posets at 128 elements; everything here is exact and small.

use crate::diagram::{Color, DynkinDiagram};
use crate::error::Error;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

pub const MAX_ELEMENTS: usize = 128;

/// Maximum number of ideals `enumerate_ideals` will materialize.
pub const MAX_IDEALS: usize = 1_000_000;

/// Index of a poset element in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

/// A downward-closed set of elements, stored as a bitmask over
/// declaration indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal(u128);

impl Ideal {
    pub const EMPTY: Ideal = Ideal(0);

    pub fn from_elems<I: IntoIterator<Item = Elem>>(iter: I) -> Ideal {
        let mut bits = 0u128;
        for e in iter {
            bits |= 1 << e.0;
        }
        Ideal(bits)
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    pub fn with(&self, e: Elem) -> Ideal {
        Ideal(self.0 | 1 << e.0)
    }

    pub fn without(&self, e: Elem) -> Ideal {
        Ideal(self.0 & !(1 << e.0))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..128).filter(|i| self.0 >> i & 1 == 1).map(Elem)
    }

    pub fn bits(&self) -> u128 {
        self.0
    }

    /// Elements of `universe` missing from this set. With the full
    /// ideal as universe this is the filter/ideal correspondence used
    /// when passing to the order dual.
    pub fn complement_in(&self, universe: Ideal) -> Ideal {
        Ideal(universe.0 & !self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Ec,
    Nd,
    Na,
    Ac,
    Ice2,
    Ucb1,
    Lcb1,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Ec,
        Axiom::Nd,
        Axiom::Na,
        Axiom::Ac,
        Axiom::Ice2,
        Axiom::Ucb1,
        Axiom::Lcb1,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Ec => "EC",
            Axiom::Nd => "ND",
            Axiom::Na => "NA",
            Axiom::Ac => "AC",
            Axiom::Ice2 => "ICE2",
            Axiom::Ucb1 => "UCB1",
            Axiom::Lcb1 => "LCB1",
        }
    }

    pub fn from_name(s: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.name() == s)
    }
}

/// Outcome of one axiom check. The witness is the lexicographically
/// first offending tuple in element order, empty when the axiom holds.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    pub witness: Vec<Elem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PosetClass {
    General,
    EcNdOnly,
    DComplete,
    Minuscule,
}

impl PosetClass {
    pub fn name(&self) -> &'static str {
        match self {
            PosetClass::General => "general",
            PosetClass::EcNdOnly => "ec-nd-only",
            PosetClass::DComplete => "d-complete",
            PosetClass::Minuscule => "minuscule",
        }
    }
}

impl fmt::Display for PosetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub class: PosetClass,
    pub reports: Vec<AxiomReport>,
}

impl Classification {
    pub fn report(&self, axiom: Axiom) -> &AxiomReport {
        self.reports.iter().find(|r| r.axiom == axiom).unwrap()
    }
}

/// A total order on the elements refining the poset order. Stored both
/// as the ordered list and as position-by-element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearExtension {
    order: Vec<Elem>,
    pos: Vec<usize>,
}

impl LinearExtension {
    pub fn order(&self) -> &[Elem] {
        &self.order
    }

    pub fn position(&self, e: Elem) -> usize {
        self.pos[e.0]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct ColoredPoset {
    names: Vec<String>,
    name_index: HashMap<String, Elem>,
    coloring: Vec<Color>,
    diagram: DynkinDiagram,
    covers: Vec<(Elem, Elem)>,
    upper: Vec<Vec<Elem>>,
    lower: Vec<Vec<Elem>>,
    below: Vec<u128>,
    above: Vec<u128>,
    default_ext: LinearExtension,
}

impl ColoredPoset {
    /// Build and validate. Covers are (lower, upper) name pairs and must
    /// be the full cover relation: acyclic, irredundant, connected.
    pub fn new<S: AsRef<str>>(
        diagram: DynkinDiagram,
        elements: &[(S, S)],
        covers: &[(S, S)],
    ) -> Result<Self, Error> {
        if elements.is_empty() {
            return Err(Error::input("poset needs at least one element"));
        }
        if elements.len() > MAX_ELEMENTS {
            return Err(Error::input(format!(
                "poset too large: {} elements exceeds the {MAX_ELEMENTS}-element cap",
                elements.len()
            )));
        }
        let mut names = Vec::new();
        let mut name_index = HashMap::new();
        let mut coloring = Vec::new();
        for (i, (name, color)) in elements.iter().enumerate() {
            let name = name.as_ref().to_string();
            if name.is_empty() {
                return Err(Error::input("empty element name"));
            }
            if name_index.insert(name.clone(), Elem(i)).is_some() {
                return Err(Error::input(format!("duplicate element {name}")));
            }
            let c = diagram
                .color(color.as_ref())
                .ok_or_else(|| Error::input(format!("unknown color {}", color.as_ref())))?;
            names.push(name);
            coloring.push(c);
        }
        for c in diagram.colors() {
            if !coloring.contains(&c) {
                return Err(Error::input(format!(
                    "color {} is unused; the coloring must be onto",
                    diagram.name(c)
                )));
            }
        }
        let n = names.len();
        let mut cover_pairs = Vec::new();
        let mut seen = HashSet::new();
        for (x, y) in covers {
            let x = *name_index
                .get(x.as_ref())
                .ok_or_else(|| Error::input(format!("unknown element {}", x.as_ref())))?;
            let y = *name_index
                .get(y.as_ref())
                .ok_or_else(|| Error::input(format!("unknown element {}", y.as_ref())))?;
            if x == y {
                return Err(Error::input(format!(
                    "cover {0}<{0} is reflexive",
                    names[x.0]
                )));
            }
            if !seen.insert((x, y)) {
                return Err(Error::input(format!(
                    "repeated cover {}<{}",
                    names[x.0], names[y.0]
                )));
            }
            cover_pairs.push((x, y));
        }
        cover_pairs.sort();

        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(x, y) in &cover_pairs {
            upper[x.0].push(y);
            lower[y.0].push(x);
        }

        // strict down-sets by propagating along a topological order
        let topo = topo_order(n, &lower, &upper)
            .ok_or_else(|| Error::input("cover relation has a cycle"))?;
        let mut below = vec![0u128; n];
        for &e in &topo {
            for &c in &lower[e.0] {
                below[e.0] |= below[c.0] | 1 << c.0;
            }
        }
        let mut above = vec![0u128; n];
        for &e in topo.iter().rev() {
            for &c in &upper[e.0] {
                above[e.0] |= above[c.0] | 1 << c.0;
            }
        }
        for &(x, y) in &cover_pairs {
            // a cover that is also reachable through an intermediate
            // element is not part of the cover relation
            if below[y.0] & above[x.0] != 0 {
                return Err(Error::input(format!(
                    "cover {}<{} is implied by other covers",
                    names[x.0], names[y.0]
                )));
            }
        }
        if n > 1 {
            let mut comp = vec![false; n];
            let mut stack = vec![0usize];
            comp[0] = true;
            while let Some(i) = stack.pop() {
                for e in upper[i].iter().chain(lower[i].iter()) {
                    if !comp[e.0] {
                        comp[e.0] = true;
                        stack.push(e.0);
                    }
                }
            }
            if !comp.iter().all(|&x| x) {
                return Err(Error::input("poset is not connected"));
            }
        }

        let declaration_ok = cover_pairs.iter().all(|&(x, y)| x.0 < y.0);
        let default_order = if declaration_ok {
            (0..n).map(Elem).collect()
        } else {
            lex_least_topo(n, &lower)
        };
        let default_ext = make_extension(n, default_order);

        Ok(ColoredPoset {
            names,
            name_index,
            coloring,
            diagram,
            covers: cover_pairs,
            upper,
            lower,
            below,
            above,
            default_ext,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.names.len()).map(Elem)
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn elem(&self, name: &str) -> Option<Elem> {
        self.name_index.get(name).copied()
    }

    pub fn color_of(&self, e: Elem) -> Color {
        self.coloring[e.0]
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn covers(&self) -> &[(Elem, Elem)] {
        &self.covers
    }

    pub fn upper_covers(&self, e: Elem) -> &[Elem] {
        &self.upper[e.0]
    }

    pub fn lower_covers(&self, e: Elem) -> &[Elem] {
        &self.lower[e.0]
    }

    /// Strict order: x < y.
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        self.below[y.0] >> x.0 & 1 == 1
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn comparable(&self, x: Elem, y: Elem) -> bool {
        x == y || self.lt(x, y) || self.lt(y, x)
    }

    pub fn full_ideal(&self) -> Ideal {
        Ideal::from_elems(self.elements())
    }

    pub fn is_ideal(&self, set: Ideal) -> bool {
        set.elems().all(|e| {
            let mask = self.below[e.0];
            mask & set.bits() == mask
        })
    }

    /// Elements that can be added to the ideal keeping it an ideal:
    /// minimal elements of the complementary filter.
    pub fn addable(&self, ideal: Ideal) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&e| {
            !ideal.contains(e) && self.lower[e.0].iter().all(|&c| ideal.contains(c))
        })
    }

    /// Maximal elements of the ideal: removing one keeps it an ideal.
    pub fn removable(&self, ideal: Ideal) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&e| {
            ideal.contains(e) && self.upper[e.0].iter().all(|&c| !ideal.contains(c))
        })
    }

    pub fn maximal_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&e| self.upper[e.0].is_empty())
    }

    pub fn minimal_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&e| self.lower[e.0].is_empty())
    }

    pub fn default_extension(&self) -> &LinearExtension {
        &self.default_ext
    }

    /// Wrap an explicit element order, checking it is a permutation
    /// refining the poset order.
    pub fn extension(&self, order: Vec<Elem>) -> Result<LinearExtension, Error> {
        let n = self.names.len();
        if order.len() != n {
            return Err(Error::input("extension must list every element once"));
        }
        let mut seen = vec![false; n];
        for e in &order {
            if e.0 >= n || seen[e.0] {
                return Err(Error::input("extension must list every element once"));
            }
            seen[e.0] = true;
        }
        let ext = make_extension(n, order);
        for &(x, y) in &self.covers {
            if ext.position(x) >= ext.position(y) {
                return Err(Error::input(format!(
                    "order not preserved: {} must precede {}",
                    self.names[x.0], self.names[y.0]
                )));
            }
        }
        Ok(ext)
    }

    /// All linear extensions, lazily, in lexicographic element order.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions {
            poset: self,
            chosen: Vec::new(),
            used: 0,
            exhausted: false,
        }
    }

    /// All order ideals, sorted by cardinality and then lexicographically
    /// along the default extension (elements earlier in the extension
    /// sort first). Refuses lattices beyond `MAX_IDEALS`.
    pub fn enumerate_ideals(&self) -> Result<Vec<Ideal>, Error> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(Ideal::EMPTY);
        queue.push_back(Ideal::EMPTY);
        while let Some(ideal) = queue.pop_front() {
            for e in self.addable(ideal) {
                let next = ideal.with(e);
                if seen.insert(next) {
                    if seen.len() > MAX_IDEALS {
                        return Err(Error::TooLarge(format!(
                            "more than {MAX_IDEALS} ideals; refusing to materialize"
                        )));
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut ideals: Vec<Ideal> = seen.into_iter().collect();
        let ext = &self.default_ext;
        ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| cmp_ext_lex(ext, a, b)));
        Ok(ideals)
    }

    /// Render an ideal as concatenated element names in extension order,
    /// or the empty-set sign.
    pub fn ideal_name(&self, ideal: Ideal) -> String {
        self.ideal_name_with(self.default_extension(), ideal)
    }

    pub fn ideal_name_with(&self, ext: &LinearExtension, ideal: Ideal) -> String {
        if ideal.is_empty() {
            return "∅".to_string();
        }
        let mut out = String::new();
        for &e in ext.order() {
            if ideal.contains(e) {
                out.push_str(&self.names[e.0]);
            }
        }
        out
    }

    pub fn check_axiom(&self, axiom: Axiom) -> AxiomReport {
        let witness = match axiom {
            Axiom::Ec => self.find_ec(),
            Axiom::Nd => self.find_nd(),
            Axiom::Na => self.find_na(),
            Axiom::Ac => self.find_ac(),
            Axiom::Ice2 => self.find_ice2(),
            Axiom::Ucb1 => self.find_ucb1(),
            Axiom::Lcb1 => self.find_lcb1(),
        };
        AxiomReport {
            axiom,
            holds: witness.is_empty(),
            witness,
        }
    }

    fn find_ec(&self) -> Vec<Elem> {
        for x in self.elements() {
            for y in self.elements().skip(x.0 + 1) {
                if self.coloring[x.0] == self.coloring[y.0] && !self.comparable(x, y) {
                    return vec![x, y];
                }
            }
        }
        Vec::new()
    }

    fn find_nd(&self) -> Vec<Elem> {
        for &(x, y) in &self.covers {
            if self.coloring[x.0] == self.coloring[y.0] {
                return vec![x, y];
            }
        }
        Vec::new()
    }

    fn find_na(&self) -> Vec<Elem> {
        for &(x, y) in &self.covers {
            if !self
                .diagram
                .adjacent(self.coloring[x.0], self.coloring[y.0])
            {
                return vec![x, y];
            }
        }
        Vec::new()
    }

    fn find_ac(&self) -> Vec<Elem> {
        for x in self.elements() {
            for y in self.elements().skip(x.0 + 1) {
                if self
                    .diagram
                    .adjacent(self.coloring[x.0], self.coloring[y.0])
                    && !self.comparable(x, y)
                {
                    return vec![x, y];
                }
            }
        }
        Vec::new()
    }

    fn find_ice2(&self) -> Vec<Elem> {
        for x in self.elements() {
            for y in self.elements() {
                if x == y || self.coloring[x.0] != self.coloring[y.0] || !self.lt(x, y) {
                    continue;
                }
                let between = self.below[y.0] & self.above[x.0];
                let intermediate_same_color = Ideal(between)
                    .elems()
                    .any(|z| self.coloring[z.0] == self.coloring[x.0]);
                if intermediate_same_color {
                    continue; // not consecutive in their color class
                }
                let adjacent_count = Ideal(between)
                    .elems()
                    .filter(|&z| {
                        self.diagram
                            .adjacent(self.coloring[z.0], self.coloring[x.0])
                    })
                    .count();
                if adjacent_count != 2 {
                    return vec![x, y];
                }
            }
        }
        Vec::new()
    }

    fn find_ucb1(&self) -> Vec<Elem> {
        for x in self.elements() {
            let color = self.coloring[x.0];
            let higher_same = Ideal(self.above[x.0])
                .elems()
                .any(|z| self.coloring[z.0] == color);
            if higher_same {
                continue; // not maximal in its color class
            }
            let offenders: Vec<Elem> = Ideal(self.above[x.0])
                .elems()
                .filter(|&z| self.diagram.adjacent(self.coloring[z.0], color))
                .collect();
            if offenders.len() > 1 {
                return vec![x, offenders[0], offenders[1]];
            }
        }
        Vec::new()
    }

    fn find_lcb1(&self) -> Vec<Elem> {
        for x in self.elements() {
            let color = self.coloring[x.0];
            let lower_same = Ideal(self.below[x.0])
                .elems()
                .any(|z| self.coloring[z.0] == color);
            if lower_same {
                continue;
            }
            let offenders: Vec<Elem> = Ideal(self.below[x.0])
                .elems()
                .filter(|&z| self.diagram.adjacent(self.coloring[z.0], color))
                .collect();
            if offenders.len() > 1 {
                return vec![x, offenders[0], offenders[1]];
            }
        }
        Vec::new()
    }

    /// Check all axioms and return the strongest matching class.
    pub fn classify(&self) -> Classification {
        let reports: Vec<AxiomReport> = Axiom::ALL.iter().map(|&a| self.check_axiom(a)).collect();
        let holds = |a: Axiom| reports.iter().find(|r| r.axiom == a).unwrap().holds;
        let class = if holds(Axiom::Ec)
            && holds(Axiom::Na)
            && holds(Axiom::Ac)
            && holds(Axiom::Ice2)
            && holds(Axiom::Ucb1)
        {
            if holds(Axiom::Lcb1) {
                PosetClass::Minuscule
            } else {
                PosetClass::DComplete
            }
        } else if holds(Axiom::Ec) && holds(Axiom::Nd) {
            PosetClass::EcNdOnly
        } else {
            PosetClass::General
        };
        Classification { class, reports }
    }

    /// The same elements and colors with all covers reversed.
    pub fn dual(&self) -> ColoredPoset {
        let elements: Vec<(String, String)> = self
            .elements()
            .map(|e| {
                (
                    self.names[e.0].clone(),
                    self.diagram.name(self.coloring[e.0]).to_string(),
                )
            })
            .collect();
        let covers: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(x, y)| (self.names[y.0].clone(), self.names[x.0].clone()))
            .collect();
        ColoredPoset::new(self.diagram.clone(), &elements, &covers)
            .expect("dual of a valid poset is valid")
    }
}

/// Compare two ideals of equal cardinality lexicographically along an
/// extension: at the first position where membership differs, the ideal
/// containing that element sorts first.
pub(crate) fn cmp_ext_lex(ext: &LinearExtension, a: &Ideal, b: &Ideal) -> std::cmp::Ordering {
    for &e in ext.order() {
        match (a.contains(e), b.contains(e)) {
            (true, false) => return std::cmp::Ordering::Less,
            (false, true) => return std::cmp::Ordering::Greater,
            _ => {}
        }
    }
    std::cmp::Ordering::Equal
}

fn make_extension(n: usize, order: Vec<Elem>) -> LinearExtension {
    let mut pos = vec![0; n];
    for (i, e) in order.iter().enumerate() {
        pos[e.0] = i;
    }
    LinearExtension { order, pos }
}

fn topo_order(n: usize, lower: &[Vec<Elem>], upper: &[Vec<Elem>]) -> Option<Vec<Elem>> {
    let mut indeg: Vec<usize> = lower.iter().map(|l| l.len()).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(i) = queue.pop_front() {
        order.push(Elem(i));
        for &u in &upper[i] {
            indeg[u.0] -= 1;
            if indeg[u.0] == 0 {
                queue.push_back(u.0);
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn lex_least_topo(n: usize, lower: &[Vec<Elem>]) -> Vec<Elem> {
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .find(|&i| !used[i] && lower[i].iter().all(|c| used[c.0]))
            .expect("acyclic cover relation always has an available element");
        used[next] = true;
        order.push(Elem(next));
    }
    order
}

/// Lazy backtracking enumeration of all linear extensions in
/// lexicographic element order.
pub struct LinearExtensions<'a> {
    poset: &'a ColoredPoset,
    chosen: Vec<Elem>,
    used: u128,
    exhausted: bool,
}

impl LinearExtensions<'_> {
    fn available(&self, from: usize) -> Option<Elem> {
        (from..self.poset.len()).map(Elem).find(|&e| {
            self.used >> e.0 & 1 == 0
                && self
                    .poset
                    .lower_covers(e)
                    .iter()
                    .all(|&c| self.used >> c.0 & 1 == 1)
        })
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.exhausted {
            return None;
        }
        let n = self.poset.len();
        if !self.chosen.is_empty() {
            // backtrack to the deepest level with a later candidate
            loop {
                match self.chosen.pop() {
                    None => {
                        self.exhausted = true;
                        return None;
                    }
                    Some(last) => {
                        self.used &= !(1 << last.0);
                        if let Some(e) = self.available(last.0 + 1) {
                            self.chosen.push(e);
                            self.used |= 1 << e.0;
                            break;
                        }
                    }
                }
            }
        }
        while self.chosen.len() < n {
            let e = self
                .available(0)
                .expect("partial topological order always extends");
            self.chosen.push(e);
            self.used |= 1 << e.0;
        }
        Some(make_extension(n, self.chosen.clone()))
    }
}

/// The running five-element example: elements v,w,x,y,z over the path
/// diagram a-b-c-d, with covers v<x, w<x, w<y, x<z, y<z and colors
/// a,c,b,d,c respectively.
pub fn figure31() -> ColoredPoset {
    let diagram =
        DynkinDiagram::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
    ColoredPoset::new(
        diagram,
        &[("v", "a"), ("w", "c"), ("x", "b"), ("y", "d"), ("z", "c")],
        &[("v", "x"), ("w", "x"), ("w", "y"), ("x", "z"), ("y", "z")],
    )
    .unwrap()
}

/// A chain x1 < x2 < ... < xn colored along the path a1 - a2 - ... - an.
pub fn chain(n: usize) -> Result<ColoredPoset, Error> {
    if n == 0 {
        return Err(Error::input("chain needs at least one element"));
    }
    let diagram = DynkinDiagram::path(n);
    let elements: Vec<(String, String)> = (1..=n)
        .map(|i| (format!("x{i}"), format!("a{i}")))
        .collect();
    let covers: Vec<(String, String)> = (1..n)
        .map(|i| (format!("x{i}"), format!("x{}", i + 1)))
        .collect();
    ColoredPoset::new(diagram, &elements, &covers)
}

/// A k-by-l grid under the componentwise order, colored along the path
/// a1 - ... - a(k+l-1) by anti-diagonals: cell (i,j) gets a(k-i+j).
pub fn rectangle(k: usize, l: usize) -> Result<ColoredPoset, Error> {
    if k == 0 || l == 0 {
        return Err(Error::input("rectangle needs positive side lengths"));
    }
    if k > 9 || l > 9 {
        return Err(Error::input(
            "rectangle sides are capped at 9 for unambiguous names",
        ));
    }
    let diagram = DynkinDiagram::path(k + l - 1);
    let mut elements = Vec::new();
    let mut covers = Vec::new();
    for i in 1..=k {
        for j in 1..=l {
            elements.push((format!("x{i}{j}"), format!("a{}", k - i + j)));
            if i < k {
                covers.push((format!("x{i}{j}"), format!("x{}{j}", i + 1)));
            }
            if j < l {
                covers.push((format!("x{i}{j}"), format!("x{i}{}", j + 1)));
            }
        }
    }
    ColoredPoset::new(diagram, &elements, &covers)
}
