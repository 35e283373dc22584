/// Solves `A x = b` over GF(2). `a` has one row per equation; entries are
/// read modulo 2. Returns `None` when inconsistent, otherwise one solution
/// (free variables set to zero).
pub fn solve_gf2(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<u8>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u8>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r: Vec<u8> = row.iter().map(|v| v.rem_euclid(2) as u8).collect();
            r.push(rhs.rem_euclid(2) as u8);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] == 1) else { continue };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][c] == 1 {
                for k in c..=cols {
                    m[i][k] ^= m[r][k];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[cols] == 1) {
        return None;
    }
    let mut x = vec![0u8; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_and_detects_inconsistency() {
        let a = vec![vec![1, 0], vec![-1, 1], vec![0, -1]];
        assert_eq!(solve_gf2(&a, &[1, 1, 0]), Some(vec![1, 0]));
        assert_eq!(solve_gf2(&a, &[1, 0, 0]), None);
    }
}
