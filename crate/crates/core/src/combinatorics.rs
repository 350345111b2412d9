//! Index conventions for exterior and symmetric powers.
//!
//! Λ^p bases are strictly increasing index tuples in lexicographic order;
//! S² bases are pairs `i <= j`, also lexicographic.

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All strictly increasing `p`-tuples from `0..n`, lexicographically.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, p));
    if p > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..p).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - p + i {
                cur[i] += 1;
                for j in i + 1..p {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographic rank of a strictly increasing tuple among `subsets(n, s.len())`.
pub fn subset_rank(n: usize, s: &[usize]) -> usize {
    let p = s.len();
    let mut rank = 0;
    let mut start = 0;
    for (i, &si) in s.iter().enumerate() {
        for v in start..si {
            rank += binomial(n - 1 - v, p - 1 - i);
        }
        start = si + 1;
    }
    rank
}

/// Sorts `s` in place and returns the permutation sign, or `None` on a repeat.
pub fn sort_with_sign(s: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..s.len() {
        let mut j = i;
        while j > 0 && s[j - 1] > s[j] {
            s.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if s.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Index of `e_i ∧ e_j` (`i < j`) in Λ²(ℚ^n).
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Index of `e_i ∨ e_j` (`i <= j`) in S²(ℚ^n).
#[inline]
pub fn sym_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    debug_assert!(j < n);
    i * (2 * n - i + 1) / 2 + (j - i)
}

pub fn sym_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(binomial(n, 2));
    for i in 0..n {
        for j in i + 1..n {
            v.push((i, j));
        }
    }
    v
}

pub fn sym_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(sym_dim(n));
    for i in 0..n {
        for j in i..n {
            v.push((i, j));
        }
    }
    v
}
