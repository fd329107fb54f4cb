//! Deterministic position enumerators. Every stream is ordered by length
//! first, then lexicographically, and contains each position exactly once
//! (the empty position included).

/// All nondecreasing tuples of up to `max_len` entries from `lo..=hi` —
/// multisets written in sorted order.
pub fn multisets(max_len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        extend_multiset(&mut out, &mut Vec::with_capacity(len), len, lo, hi);
    }
    out
}

fn extend_multiset(out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>, len: usize, lo: u32, hi: u32) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for v in lo..=hi {
        prefix.push(v);
        extend_multiset(out, prefix, len, v, hi);
        prefix.pop();
    }
}

/// All strictly increasing tuples of up to `max_len` entries from
/// `1..=max` — sets of distinct heap sizes.
pub fn subsets(max_len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        extend_subset(&mut out, &mut Vec::with_capacity(len), len, 1, max);
    }
    out
}

fn extend_subset(out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>, len: usize, lo: u32, max: u32) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for v in lo..=max {
        prefix.push(v);
        extend_subset(out, prefix, len, v + 1, max);
        prefix.pop();
    }
}

/// All ordered tuples of up to `max_len` entries from `lo..=hi`.
pub fn sequences(max_len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        out.extend(sequences_exact(len, lo, hi));
    }
    out
}

/// All ordered tuples of exactly `len` entries from `lo..=hi`.
pub fn sequences_exact(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    extend_sequence(&mut out, &mut Vec::with_capacity(len), len, lo, hi);
    out
}

fn extend_sequence(out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>, len: usize, lo: u32, hi: u32) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for v in lo..=hi {
        prefix.push(v);
        extend_sequence(out, prefix, len, lo, hi);
        prefix.pop();
    }
}
