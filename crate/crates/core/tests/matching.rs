use parteq_core::enumerate::all_partitions;
use parteq_core::families::ColoredPart;
use parteq_core::membership::check_b;
use parteq_core::{BicoloredPartition, Enumerator, Partition};

/// Tries every assignment of reds to distinct blues of value c or c+1.
fn brute_force_matchable(blues: &[u32], reds: &[u32]) -> bool {
    fn go(reds: &[u32], blues: &[u32], used: &mut Vec<bool>) -> bool {
        let Some((&c, rest)) = reds.split_first() else {
            return true;
        };
        for (i, &b) in blues.iter().enumerate() {
            if !used[i] && (b == c || b == c + 1) {
                used[i] = true;
                if go(rest, blues, used) {
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }
    go(reds, blues, &mut vec![false; blues.len()])
}

fn distinct(n: usize) -> Vec<Partition> {
    all_partitions(n)
        .into_iter()
        .filter(Partition::has_distinct_parts)
        .collect()
}

#[test]
fn matching_agrees_with_brute_force() {
    let e = Enumerator::new();
    for n in 0..=14 {
        let mut accepted = Vec::new();
        for blue_weight in 0..=n {
            for blues in distinct(blue_weight) {
                for reds in distinct(n - blue_weight) {
                    let entries: Vec<ColoredPart> = blues
                        .parts()
                        .iter()
                        .map(|&v| ColoredPart::blue(v))
                        .chain(reds.parts().iter().map(|&v| ColoredPart::red(v)))
                        .collect();
                    let b = BicoloredPartition::from_unsorted(entries).unwrap();
                    let expected = brute_force_matchable(blues.parts(), reds.parts());
                    assert_eq!(check_b(&b).is_ok(), expected, "{b}");
                    if expected {
                        accepted.push(b);
                    }
                }
            }
        }
        accepted.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(e.b(n, None).unwrap(), accepted, "n = {n}");
    }
}
