//! Exhaustive enumeration of partitions and plane partitions, used to check
//! the recurrences in `seqcore` on small arguments.

/// Number of partitions of `n`, by listing non-increasing part sequences.
pub fn count_partitions(n: usize) -> u64 {
    fn go(rest: usize, max_part: usize) -> u64 {
        if rest == 0 {
            return 1;
        }
        (1..=max_part.min(rest)).map(|part| go(rest - part, part)).sum()
    }
    go(n, n)
}

/// All partitions of `n` with parts at most `max_part`, as non-increasing
/// vectors.
fn partitions_bounded(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for part in (1..=max_part.min(n)).rev() {
        for mut tail in partitions_bounded(n - part, part) {
            tail.insert(0, part);
            out.push(tail);
        }
    }
    out
}

/// Number of plane partitions of `n`: arrays with non-increasing rows and
/// columns, built row by row with each row dominated by the one above.
pub fn count_plane_partitions(n: usize) -> u64 {
    fn rows_below(rest: usize, above: &[usize]) -> u64 {
        if rest == 0 {
            return 1;
        }
        let mut total = 0;
        for m in 1..=rest {
            for row in partitions_bounded(m, above[0]) {
                if row.len() <= above.len() && row.iter().zip(above).all(|(r, a)| r <= a) {
                    total += rows_below(rest - m, &row);
                }
            }
        }
        total
    }
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for m in 1..=n {
        for row in partitions_bounded(m, m) {
            total += rows_below(n - m, &row);
        }
    }
    total
}
