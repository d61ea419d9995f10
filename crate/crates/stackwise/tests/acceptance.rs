//! End-to-end acceptance checks, one test per criterion. Everything is
//! exact arithmetic; there are no tolerances anywhere. Run with
//! `--nocapture` to see one summary line per criterion.

use num_rational::BigRational;
use stackwise::basis::{build_basis, certify_standard, stackwise_vector, BasisOutcome, Expander};
use stackwise::diagram::Color;
use stackwise::format::{parse_flag, parse_ideal, parse_poset, render_extension};
use stackwise::identities::{verify_grid, IdentityStatus, VerifyMode};
use stackwise::lattice::raise_terms;
use stackwise::mvector::{
    act_word, act_word_steps, act_word_sum, flag_to_ppartition, gravity_cmp_ideals,
    gravity_cmp_multisets, ppartition_to_flag, MMultiset, MTuple, MVector, PPartition, Slots,
    TupleVector,
};
use stackwise::poset::{chain, figure31, rectangle, Axiom, ColoredPoset, Ideal, LinearExtension};
use stackwise::rep::{count_multichains, mu_table, seshadri_basis, verify_borel, verify_kacmoody};
use stackwise::words::{classify_case, grows_well, stackwise_word, word_cmp, Word, WordCase};
use std::cmp::Ordering;
use std::collections::HashSet;

const SEED: u64 = 2024;

fn ideal(p: &ColoredPoset, s: &str) -> Ideal {
    parse_ideal(p, s).unwrap()
}

fn multiset(p: &ColoredPoset, ext: &LinearExtension, s: &str) -> MMultiset {
    MMultiset::new(
        s.split(';').map(|part| ideal(p, part.trim())).collect(),
        ext,
    )
}

fn mvec(p: &ColoredPoset, ext: &LinearExtension, terms: &[(i64, &str)]) -> MVector {
    let m = terms[0].1.split(';').count();
    let mut v = MVector::zero(m);
    for &(c, s) in terms {
        v.add_term(multiset(p, ext, s), BigRational::from_integer(c.into()));
    }
    v
}

fn empty_start(m: usize) -> MVector {
    MVector::unit(MMultiset::empty(m))
}

/// Count bounded order-reversing assignments directly, one candidate
/// value vector at a time. Deliberately naive: this is the oracle the
/// dynamic program is checked against.
fn brute_force_ppartitions(p: &ColoredPoset, m: u32) -> u128 {
    let n = p.len();
    let mut values = vec![0u32; n];
    let mut count = 0u128;
    loop {
        let ok = p
            .covers()
            .iter()
            .all(|&(lo, hi)| values[lo.0] >= values[hi.0]);
        if ok {
            count += 1;
        }
        let mut at = 0;
        loop {
            if at == n {
                return count;
            }
            if values[at] < m {
                values[at] += 1;
                break;
            }
            values[at] = 0;
            at += 1;
        }
    }
}

fn catalog_posets() -> Vec<ColoredPoset> {
    vec![
        figure31(),
        chain(2).unwrap(),
        chain(3).unwrap(),
        rectangle(2, 2).unwrap(),
    ]
}

#[test]
fn c1_flag_vector_leading_term_and_traced_steps() {
    let p = figure31();
    let ext = p.default_extension().clone();
    assert_eq!(render_extension(&p, &ext), "v<w<x<y<z");

    let flag = parse_flag(&p, "vwxy;vw;vw;w").unwrap();
    let word = stackwise_word(&p, &ext, &flag);
    assert_eq!(word.render(&p), "d,b,c^4,a^3");

    let v = stackwise_vector(&p, &ext, &flag);
    let terms = v.sorted_terms(&ext);
    assert_eq!(*terms[0].0, multiset(&p, &ext, "vwxy;vw;vw;w"));
    assert_eq!(*terms[0].1, BigRational::from_integer(12.into()));
    assert_eq!(
        v,
        mvec(
            &p,
            &ext,
            &[
                (12, "vwxy;vw;vw;w"),
                (24, "vwx;vwy;vw;w"),
                (12, "vwx;vw;vw;wy"),
            ],
        )
    );

    let steps = act_word_steps(&p, &ext, &empty_start(4), &word).unwrap();
    assert_eq!(steps[0], mvec(&p, &ext, &[(4, "v;v;v;∅")]));
    assert_eq!(steps[1], mvec(&p, &ext, &[(4, "vw;vw;vw;w")]));
    assert_eq!(*steps.last().unwrap(), v);

    println!("criterion 1 (4-flag vector: leading term 12 and traced steps): pass");
}

#[test]
fn c2_word_action_and_total_order_comparison() {
    let p = figure31();
    let ext = p.default_extension().clone();

    let grouped = Word::parse(&p, "d,b,c^2,a^2").unwrap();
    let spread = Word::parse(&p, "d,c,d,b,c,a").unwrap();

    let acted = act_word(&p, &ext, &empty_start(2), &spread).unwrap();
    assert_eq!(acted, mvec(&p, &ext, &[(2, "vwxy;wy")]));

    let ga = grows_well(&p, &ext, 2, &grouped);
    assert!(ga.grew_fully());
    assert_eq!(ga.render_replaced(&p), "y,x,w,w,v,v");

    let gb = grows_well(&p, &ext, 2, &spread);
    assert!(!gb.grew_fully());
    assert_eq!(gb.render_replaced(&p), "d,z,y,x,w,v");

    assert_eq!(word_cmp(&p, &ext, 2, &grouped, &spread), Ordering::Less);
    assert_eq!(word_cmp(&p, &ext, 2, &spread, &grouped), Ordering::Greater);

    println!("criterion 2 (six-letter action 2{{vwxy, wy}} and word comparison): pass");
}

#[test]
fn c3_identity_grid_exhaustive_on_catalogs() {
    let mut posets = vec![figure31(), rectangle(2, 2).unwrap()];
    for n in 1..=4 {
        posets.push(chain(n).unwrap());
    }
    let mut checks_run = 0usize;
    let mut cases_run = 0usize;
    for p in &posets {
        let ext = p.default_extension().clone();
        for m in 1..=3 {
            let checks = verify_grid(p, &ext, m, 3, 3, 3, VerifyMode::Exhaustive).unwrap();
            for c in &checks {
                assert!(c.exhaustive);
                assert!(
                    !matches!(c.status, IdentityStatus::Fails(_)),
                    "m={m}: {}",
                    c.render_line()
                );
            }
            checks_run += checks.len();
            cases_run += checks.iter().map(|c| c.cases).sum::<usize>();
        }
    }
    println!(
        "criterion 3 (identity grid, {checks_run} checks over {cases_run} starting cases, zero failures): pass"
    );
}

#[test]
fn c4_certification_with_random_words() {
    let p = figure31();
    let report = certify_standard(&p, 3, true, 500, SEED).unwrap();
    assert!(report.certified(), "{}", report.render(&p));
    assert_eq!(report.extensions_checked, 5);
    assert_eq!(report.runs.len(), 15);
    assert!(report.runs.iter().all(|r| r.words_expanded >= 500));

    let r = rectangle(2, 2).unwrap();
    let report2 = certify_standard(&r, 2, false, 500, SEED).unwrap();
    assert!(report2.certified(), "{}", report2.render(&r));

    println!("criterion 4 (certification, 5 extensions x m<=3 plus the square, >=500 random words each): pass");
}

#[test]
fn c5_dependence_witness_without_equal_color_comparability() {
    let p =
        parse_poset("colors: a b\nedges: a-b\nelements: s:a t:b u:a\ncovers: s<t u<t\n").unwrap();
    assert!(!p.check_axiom(Axiom::Ec).holds);
    let ext = p.default_extension().clone();

    let dep = match build_basis(&p, &ext, 2).unwrap() {
        BasisOutcome::Dependent(dep) => dep,
        BasisOutcome::Basis(_) => {
            panic!("two incomparable same-colored elements must break the basis")
        }
    };
    assert_eq!(dep.axiom, Axiom::Ec);
    assert_eq!(dep.m, 2);
    assert_ne!(dep.flag1, dep.flag2);
    assert!(!dep.vector1.is_zero());
    assert_eq!(dep.vector1, dep.vector2.scaled(&dep.ratio));
    assert_eq!(dep.ratio, BigRational::from_integer(2.into()));

    // recompute both vectors from scratch; the single-term action
    // rightly refuses the ambiguous raising here
    assert!(act_word(&p, &ext, &empty_start(2), &dep.word1).is_err());
    let v1 = act_word_sum(&p, &ext, &empty_start(2), &dep.word1);
    let v2 = act_word_sum(&p, &ext, &empty_start(2), &dep.word2);
    assert_eq!(v1, dep.vector1);
    assert_eq!(v2, dep.vector2);

    let report = certify_standard(&p, 2, false, 10, SEED).unwrap();
    assert!(!report.certified());
    assert!(report.dependence.is_some());

    println!("criterion 5 (dependence witness on an EC-violating poset, exact 2:1 scale): pass");
}

#[test]
fn c6_case_prediction_matches_expansion() {
    let p = figure31();
    let ext = p.default_extension().clone();
    let colors: Vec<Color> = (0..p.diagram().len()).map(Color).collect();

    let mut words_checked = 0usize;
    let mut labels_seen: HashSet<&'static str> = HashSet::new();
    for m in 1..=3usize {
        let basis = match build_basis(&p, &ext, m).unwrap() {
            BasisOutcome::Basis(b) => b,
            BasisOutcome::Dependent(_) => unreachable!(),
        };
        let mut expander = Expander::new(&p, &ext, m);
        for entry in basis.entries() {
            let tail = stackwise_word(&p, &ext, &entry.flag);
            for &color in &colors {
                for q in 1..=(m as u32 + 1) {
                    let word = tail.with_leading(color, q);
                    let case = classify_case(&p, &ext, m, &word).unwrap();
                    labels_seen.insert(case.label());
                    let acted = act_word(&p, &ext, &empty_start(m), &word).unwrap();

                    match &case {
                        WordCase::ZeroNoMinimal | WordCase::ZeroOverflow => {
                            assert!(acted.is_zero(), "word <{}> should vanish", word.render(&p));
                        }
                        WordCase::Minimal {
                            element,
                            coefficient,
                        } => {
                            let mut ideals = vec![Ideal::from_elems([*element]); q as usize];
                            ideals.extend(std::iter::repeat_n(Ideal::EMPTY, m - q as usize));
                            let expected = MVector::unit(MMultiset::new(ideals, &ext))
                                .scaled(&BigRational::from_integer(coefficient.clone()));
                            assert_eq!(acted, expected);
                        }
                        WordCase::Glued { flag, coefficient } => {
                            let expected = stackwise_vector(&p, &ext, flag)
                                .scaled(&BigRational::from_integer(coefficient.clone()));
                            assert_eq!(acted, expected);
                        }
                        WordCase::Stackwise { flag } => {
                            assert_eq!(acted, stackwise_vector(&p, &ext, flag));
                        }
                        WordCase::Lower => {}
                    }

                    // the expansion must reproduce the acted vector with
                    // integer coordinates, and in the last case every
                    // contributing flag must sit strictly below the word
                    let expansion = expander.expand(&word).unwrap();
                    assert!(expansion.integral, "word <{}>", word.render(&p));
                    let mut residual = acted.clone();
                    for (flag, c) in &expansion.coefficients {
                        residual.sub_assign(&stackwise_vector(&p, &ext, flag).scaled(c));
                        if matches!(case, WordCase::Lower) {
                            let fw = stackwise_word(&p, &ext, flag);
                            assert_eq!(
                                word_cmp(&p, &ext, m, &fw, &word),
                                Ordering::Less,
                                "flag word <{}> not below <{}>",
                                fw.render(&p),
                                word.render(&p)
                            );
                        }
                    }
                    assert!(residual.is_zero(), "word <{}>", word.render(&p));
                    words_checked += 1;
                }
            }
        }
    }
    for label in ["a", "b", "c", "d-i", "d-ii", "e"] {
        assert!(labels_seen.contains(label), "case {label} never arose");
    }
    println!(
        "criterion 6 (case prediction vs expansion, {words_checked} augmented words, all six cases seen): pass"
    );
}

#[test]
fn c7_operator_relations_and_mu_path_independence() {
    let p = figure31();
    let mu = mu_table(&p).unwrap();
    assert_eq!(mu.ideals().len(), 9);
    let borel = verify_borel(&p, &mu, false).unwrap();
    assert!(
        borel.iter().all(|r| r.holds),
        "{:?}",
        borel.iter().find(|r| !r.holds)
    );

    for q in [chain(2).unwrap(), rectangle(2, 2).unwrap()] {
        let muq = mu_table(&q).unwrap();
        let km = verify_kacmoody(&q, &muq, false).unwrap();
        assert!(
            km.iter().all(|r| r.holds),
            "{:?}",
            km.iter().find(|r| !r.holds)
        );
        for &i in muq.ideals() {
            assert!(muq.row(i).iter().all(|v| v.abs() <= 1));
        }
    }

    let km_fig = verify_kacmoody(&p, &mu, false).unwrap();
    assert!(km_fig.iter().any(|r| !r.holds));

    // every split-lattice edge is consistent with one value table, so
    // any two descent paths through a diamond agree
    let mut edges_checked = 0usize;
    for q in [
        figure31(),
        chain(4).unwrap(),
        rectangle(2, 2).unwrap(),
        rectangle(2, 3).unwrap(),
    ] {
        let muq = mu_table(&q).unwrap();
        let gcm = q.diagram().gcm();
        for &i in muq.ideals() {
            for x in q.addable(i) {
                let j = i.with(x);
                for (col, &val) in muq.row(i).iter().enumerate() {
                    assert_eq!(
                        val,
                        muq.value(j, Color(col)) - gcm.entry(q.color_of(x), Color(col)),
                        "edge {} -> {} disagrees",
                        q.ideal_name(i),
                        q.ideal_name(j)
                    );
                }
                edges_checked += 1;
            }
        }
    }
    println!(
        "criterion 7 (relation suites on three posets, one forced failure, {edges_checked} descent edges consistent): pass"
    );
}

#[test]
fn c8_dimension_counts_and_dual_bases() {
    let c2 = chain(2).unwrap();
    let r22 = rectangle(2, 2).unwrap();

    let table = [(&c2, 2u32, 6u128), (&r22, 1, 6), (&r22, 2, 20)];
    for &(p, m, want) in &table {
        assert_eq!(count_multichains(p, m as usize).unwrap(), want);
        assert_eq!(brute_force_ppartitions(p, m), want);
        assert_eq!(
            seshadri_basis(p, m as usize).unwrap().dimension() as u128,
            want
        );
    }
    let fig = figure31();
    assert_eq!(count_multichains(&fig, 1).unwrap(), 9);
    assert_eq!(brute_force_ppartitions(&fig, 1), 9);

    // the downward bases live on the order duals, which stay minuscule
    for (p, m_max) in [(&c2, 2usize), (&r22, 2)] {
        let dual = p.dual();
        assert_eq!(dual.classify().class.name(), "minuscule");
        let report = certify_standard(&dual, m_max, true, 500, SEED).unwrap();
        assert!(report.certified(), "{}", report.render(&dual));
    }

    // negative control: dualizing the bigger poset breaks an axiom, and
    // with it the spanning property; certification must refuse it
    let fig_dual = fig.dual();
    assert_eq!(fig_dual.classify().class.name(), "ec-nd-only");
    assert!(!certify_standard(&fig_dual, 3, true, 50, SEED)
        .unwrap()
        .certified());

    println!("criterion 8 (dimensions 6/6/20 with oracle, minuscule dual bases certified): pass");
}

#[test]
fn c9_property_suites_exhaustive() {
    let mut flags_checked = 0usize;
    for p in catalog_posets() {
        let ext = p.default_extension().clone();
        let ideals = p.enumerate_ideals().unwrap();
        let ncolors = p.diagram().len();

        // the gravity comparison is a total order on ideals
        for &a in &ideals {
            for &b in &ideals {
                let ab = gravity_cmp_ideals(&ext, &a, &b);
                assert_eq!(ab == Ordering::Equal, a == b);
                assert_eq!(ab.reverse(), gravity_cmp_ideals(&ext, &b, &a));
                for &c in &ideals {
                    if ab != Ordering::Greater
                        && gravity_cmp_ideals(&ext, &b, &c) != Ordering::Greater
                    {
                        assert_ne!(gravity_cmp_ideals(&ext, &a, &c), Ordering::Greater);
                    }
                }
            }
        }

        // raising twice with one color kills any single ideal
        for &i in &ideals {
            for c in (0..ncolors).map(Color) {
                for j in raise_terms(&p, i, c) {
                    assert!(raise_terms(&p, j, c).is_empty());
                }
            }
        }

        for m in 1..=3usize {
            // ... and on m-multisets
            let mut multisets: Vec<MMultiset> = Vec::new();
            let mut seen = HashSet::new();
            let mut idx = vec![0usize; m];
            loop {
                let ms = MMultiset::new(idx.iter().map(|&k| ideals[k]).collect(), &ext);
                if seen.insert(ms.clone()) {
                    multisets.push(ms);
                }
                let mut at = 0;
                loop {
                    if at == m {
                        break;
                    }
                    if idx[at] + 1 < ideals.len() {
                        idx[at] += 1;
                        break;
                    }
                    idx[at] = 0;
                    at += 1;
                }
                if at == m {
                    break;
                }
            }
            for a in &multisets {
                for b in &multisets {
                    let ab = gravity_cmp_multisets(&ext, a.ideals(), b.ideals());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    assert_eq!(
                        ab.reverse(),
                        gravity_cmp_multisets(&ext, b.ideals(), a.ideals())
                    );
                }
            }

            let basis = match build_basis(&p, &ext, m).unwrap() {
                BasisOutcome::Basis(b) => b,
                BasisOutcome::Dependent(_) => unreachable!(),
            };
            for entry in basis.entries() {
                let flag = &entry.flag;

                // flag to bounded assignment and back is the identity
                let psi = flag_to_ppartition(&p, flag);
                assert_eq!(&ppartition_to_flag(&p, &psi), flag);

                // the word spends exactly the colors the flag contains
                let word = stackwise_word(&p, &ext, flag);
                let mut from_word = vec![0u32; ncolors];
                for c in word.letters() {
                    from_word[c.0] += 1;
                }
                let mut from_flag = vec![0u32; ncolors];
                for i in flag.ideals() {
                    for e in i.elems() {
                        from_flag[p.color_of(e).0] += 1;
                    }
                }
                assert_eq!(from_word, from_flag);

                // every ideal anywhere in the vector fits inside the
                // flag's outermost ideal
                let v = stackwise_vector(&p, &ext, flag);
                let top = flag.ideals()[0];
                for (ms, _) in v.sorted_terms(&ext) {
                    for j in ms.ideals() {
                        assert!(j.is_subset(&top));
                    }
                }

                // ordered-slot action, forgotten down to multisets,
                // agrees with the multiset action
                let on_tuples =
                    act_word(&p, &ext, &TupleVector::unit(MTuple::empty(m)), &word).unwrap();
                assert_eq!(on_tuples.into_multisets(&ext), v);

                flags_checked += 1;
            }

            // the other direction of the round trip, over every bounded
            // order-reversing assignment
            let mut values = vec![0u32; p.len()];
            loop {
                let ok = p
                    .covers()
                    .iter()
                    .all(|&(lo, hi)| values[lo.0] >= values[hi.0]);
                if ok {
                    let psi = PPartition::new(&p, values.clone(), m as u32).unwrap();
                    let flag = ppartition_to_flag(&p, &psi);
                    assert_eq!(flag_to_ppartition(&p, &flag), psi);
                }
                let mut at = 0;
                loop {
                    if at == p.len() {
                        break;
                    }
                    if values[at] < m as u32 {
                        values[at] += 1;
                        break;
                    }
                    values[at] = 0;
                    at += 1;
                }
                if at == p.len() {
                    break;
                }
            }

            // short unstructured words act consistently on tuples too
            let len_cap = if m < 3 { 4 } else { 3 };
            let mut stack: Vec<Vec<Color>> = vec![Vec::new()];
            while let Some(letters) = stack.pop() {
                if !letters.is_empty() {
                    let word = Word::new(letters.iter().rev().map(|&c| (c, 1)).collect());
                    let on_multisets = act_word(&p, &ext, &empty_start(m), &word).unwrap();
                    let on_tuples =
                        act_word(&p, &ext, &TupleVector::unit(MTuple::empty(m)), &word).unwrap();
                    assert_eq!(on_tuples.into_multisets(&ext), on_multisets);
                }
                if letters.len() < len_cap {
                    for c in (0..ncolors).map(Color) {
                        let mut next = letters.clone();
                        next.push(c);
                        stack.push(next);
                    }
                }
            }
        }
    }
    println!(
        "criterion 9 (order laws, round trips, census, nilpotence, containment, slot consistency on {flags_checked} flags): pass"
    );
}
