use hitomezashi::grid::{is_self_dual, PatternSpec, Segment};
use hitomezashi::loops::{check_loop_theorems, extract_components, loops};
use hitomezashi::tiles::{persimmon_word, Snowflake};
use hitomezashi::words::{fib_turtle_word, fibonacci, pell, pell_word, Bit};
use hitomezashi::{BinaryWord, SnowflakeOrder, StitchGrid};
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = BinaryWord> {
    prop::collection::vec(any::<bool>(), 1..=max)
        .prop_map(|bits| bits.into_iter().map(Bit::from_bool).collect())
}

fn grid() -> impl Strategy<Value = StitchGrid> {
    (word(8), word(8), 1usize..=40, 1usize..=40)
        .prop_map(|(w, v, x, y)| PatternSpec::periodic("p", w, v, x, y).build().unwrap())
}

/// Presence on the infinite pattern, straight from the encoding.
fn present(w: &BinaryWord, v: &BinaryWord, horizontal: bool, x: i64, y: i64) -> bool {
    let bit = |word: &BinaryWord, i: i64| {
        word.cyclic(i.rem_euclid(word.len() as i64) as usize)
            .value() as i64
    };
    if horizontal {
        (x + bit(w, y)).rem_euclid(2) == 1
    } else {
        (y + bit(v, x)).rem_euclid(2) == 1
    }
}

/// Does translating the pattern by (dx, dy) land every stitch on a stitch of
/// the dual? Checked over one full period in each direction.
fn shift_maps_to_dual(w: &BinaryWord, v: &BinaryWord, dx: i64, dy: i64) -> bool {
    let (px, py) = (2 * v.len() as i64, 2 * w.len() as i64);
    let (wd, vd) = (w.complement(), v.complement());
    (0..px).all(|x| {
        (0..py).all(|y| {
            [true, false]
                .iter()
                .all(|&h| present(w, v, h, x, y) == present(&wd, &vd, h, x + dx, y + dy))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn segments_split_into_cycles_and_paths(g in grid()) {
        let comps = extract_components(&g);
        let mut used: usize = comps.cycles.iter().map(|c| c.perimeter()).sum();
        used += comps.open_paths.iter().map(|p| p.len() - 1).sum::<usize>();
        prop_assert_eq!(used, g.present_segments().count());
    }

    #[test]
    fn loops_obey_theorems(g in grid()) {
        for l in loops(&g) {
            prop_assert!(check_loop_theorems(&l.stats).all(), "{:?}", l.stats);
            prop_assert_eq!(l.cycle.shoelace_area() as usize, l.polyomino.area());
            prop_assert_eq!(l.stats.stitch_width(), l.stats.width + 1);
        }
    }

    #[test]
    fn dual_is_an_involution_and_complements(g in grid()) {
        let d = g.dual();
        prop_assert_eq!(&d.dual(), &g);
        for s in g.all_segments() {
            prop_assert_ne!(g.is_present(s), d.is_present(s));
        }
    }

    #[test]
    fn stitches_alternate_along_lines(g in grid()) {
        for y in 0..=g.height() {
            for x in 0..g.width().saturating_sub(1) {
                prop_assert_ne!(g.has_horizontal(x, y), g.has_horizontal(x + 1, y));
            }
        }
        for x in 0..=g.width() {
            for y in 0..g.height().saturating_sub(1) {
                prop_assert_ne!(g.has_vertical(x, y), g.has_vertical(x, y + 1));
            }
        }
    }

    #[test]
    fn pattern_repeats_with_word_periods(w in word(8), v in word(8)) {
        let (pw, ph) = (2 * v.len(), 2 * w.len());
        let g = PatternSpec::periodic("p", w, v, 2 * pw, 2 * ph).build().unwrap();
        for s in g.all_segments() {
            let moved = match s {
                Segment::Horizontal { x, y } if x + pw < g.width() && y + ph <= g.height() =>
                    Segment::Horizontal { x: x + pw, y: y + ph },
                Segment::Vertical { x, y } if x + pw <= g.width() && y + ph < g.height() =>
                    Segment::Vertical { x: x + pw, y: y + ph },
                _ => continue,
            };
            prop_assert_eq!(g.is_present(s), g.is_present(moved));
        }
    }

    #[test]
    fn self_dual_agrees_with_brute_force(w in word(6), v in word(6)) {
        let found = is_self_dual(&w, &v).unwrap();
        let oracle = (0..2 * v.len() as i64)
            .any(|dx| (0..2 * w.len() as i64).any(|dy| shift_maps_to_dual(&w, &v, dx, dy)));
        prop_assert_eq!(found.is_some(), oracle);
        if let Some((dx, dy)) = found {
            prop_assert!(
                shift_maps_to_dual(&w, &v, dx as i64, dy as i64)
                    || shift_maps_to_dual(&w, &v, -(dx as i64), -(dy as i64))
            );
        }
    }

    #[test]
    fn word_involutions(w in word(16)) {
        prop_assert_eq!(w.complement().complement(), w.clone());
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        prop_assert_eq!(w.complement().reverse(), w.reverse().complement());
    }
}

#[test]
fn pell_words_alternate_palindrome_and_antipalindrome() {
    for n in 1..=12 {
        let u = pell_word(n);
        assert_eq!(u.len() as u128, pell(n));
        if n % 2 == 1 {
            assert!(u.is_palindrome(), "u_{n}");
        } else {
            assert!(u.is_antipalindrome(), "u_{n}");
        }
    }
}

#[test]
fn number_congruences() {
    for n in 0..=10 {
        assert_eq!(fibonacci(3 * n + 1) % 2, 1);
        assert_eq!(pell(2 * n + 1) % 4, 1);
    }
}

#[test]
fn turtle_word_lengths_follow_fibonacci() {
    assert_eq!(fib_turtle_word(0).len(), 0);
    assert_eq!(fib_turtle_word(1).len(), 1);
    for n in 2..=16 {
        let len = fib_turtle_word(n).len();
        assert_eq!(
            len,
            fib_turtle_word(n - 1).len() + fib_turtle_word(n - 2).len()
        );
        assert_eq!(len as u128, fibonacci(n - 1));
    }
}

#[test]
fn snowflake_invariants() {
    let areas = [1, 5, 29, 169, 985];
    for n in 1..=5 {
        let s = Snowflake::new(SnowflakeOrder::new(n).unwrap()).unwrap();
        let stats = s.stats();
        assert_eq!(stats.area, areas[n as usize - 1]);
        assert_eq!(s.cycle.shoelace_area() as usize, stats.area);
        assert!(s.has_fourfold_symmetry());
        assert_eq!(stats.stitch_width() as u128, 2 * pell(n));
        assert_eq!(stats.width, stats.height);
    }
}

#[test]
fn persimmon_patterns_are_self_dual() {
    for n in 1..=6 {
        let w = persimmon_word(SnowflakeOrder::new(n).unwrap());
        let p = pell(n) as usize;
        assert_eq!(is_self_dual(&w, &w).unwrap(), Some((p, p)), "order {n}");
        assert!(shift_maps_to_dual(&w, &w, p as i64, p as i64));
    }
}
