use moykit::moy::{
    colored_rotation, parse, random_closed_word, reverse_mirror, serialize, validate, Dir, EventKind,
    RandomWordConfig, SliceWord, Strand,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(seed: u64, crossings: bool) -> SliceWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = RandomWordConfig { max_events: 8, max_color: 3, crossings, vertices: true };
    random_closed_word(&mut rng, &cfg)
}

/// Flow check written out independently of the event semantics in the
/// library: tracks `(color, up?)` pairs.
fn flows(w: &SliceWord) -> bool {
    let mut front: Vec<(u32, bool)> = w.initial.iter().map(|s| (s.color, s.dir == Dir::Up)).collect();
    for ev in &w.events {
        let i = ev.pos;
        match ev.kind {
            EventKind::Cup { color, turn } => {
                if i > front.len() {
                    return false;
                }
                let (a, b) = turn.pair();
                front.splice(i..i, [(color, a == Dir::Up), (color, b == Dir::Up)]);
            }
            EventKind::Cap { color, turn } => {
                let (a, b) = turn.pair();
                if i + 1 >= front.len() || front[i] != (color, a == Dir::Up) || front[i + 1] != (color, b == Dir::Up) {
                    return false;
                }
                front.drain(i..i + 2);
            }
            EventKind::Split { left, right } => {
                let Some(&(c, up)) = front.get(i) else { return false };
                if c != left + right {
                    return false;
                }
                front.splice(i..i + 1, [(left, up), (right, up)]);
            }
            EventKind::Merge { left, right } => {
                if i + 1 >= front.len() || front[i] != (left, front[i].1) || front[i + 1] != (right, front[i].1) {
                    return false;
                }
                let up = front[i].1;
                front.splice(i..i + 2, [(left + right, up)]);
            }
            EventKind::Cross(_) => {
                if i + 1 >= front.len() {
                    return false;
                }
                front.swap(i, i + 1);
            }
        }
    }
    true
}

proptest! {
    #[test]
    fn validator_agrees_with_flow(seed: u64, victim in 0usize..8, bump in 1u32..3) {
        let mut w = word(seed, true);
        prop_assert!(validate(&w).is_empty());
        prop_assert!(flows(&w));
        let k = victim % w.events.len();
        match &mut w.events[k].kind {
            EventKind::Cup { color, .. } | EventKind::Cap { color, .. } => *color += bump,
            EventKind::Split { left, .. } | EventKind::Merge { left, .. } => *left += bump,
            EventKind::Cross(_) => w.events[k].pos += bump as usize,
        }
        prop_assert_eq!(validate(&w).is_empty(), flows(&w));
    }

    #[test]
    fn mirror_negates_rotation(seed: u64) {
        let w = word(seed, false);
        let r = colored_rotation(&w).unwrap();
        prop_assert_eq!(colored_rotation(&reverse_mirror(&w).unwrap()).unwrap(), -r);
    }

    #[test]
    fn parse_serialize_round_trip(seed: u64, crossings: bool) {
        let w = word(seed, crossings);
        prop_assert_eq!(parse(&serialize(&w)).unwrap(), w);
    }
}

#[test]
fn round_trip_with_boundary() {
    let text = "N 3\nboundary: 2u 1d\nsplit 1 1 @0\nx- @1\n";
    let w = parse(text).unwrap();
    assert_eq!(w.initial, vec![Strand::up(2), Strand::down(1)]);
    assert_eq!(parse(&serialize(&w)).unwrap(), w);
}
