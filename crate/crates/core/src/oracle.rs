//! Brute-force reference computations for small degrees.
//!
//! Nothing here uses stabilizer chains or tuple canonization: orbits on
//! `Ω^k` are found by breadth-first search over all `n^k` tuples, and the
//! closure is obtained by testing every element of `Sym(Ω)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest degree the filtration accepts.
pub const MAX_DEGREE: usize = 8;

/// Every permutation of `0..n`, in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(images.clone()).unwrap());
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| images[i - 1] < images[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| images[j] > images[i - 1]).unwrap();
        images.swap(i - 1, j);
        images[i..].reverse();
    }
    out
}

/// Orbit labels of `⟨gens⟩` on `Ω^k`, indexed by the base-`n` encoding of a
/// tuple.
pub fn tuple_orbit_labels(n: usize, gens: &[Permutation], k: usize) -> Vec<u32> {
    let total = n.pow(k as u32);
    let mut label = vec![u32::MAX; total];
    let decode = |mut code: usize| -> Vec<usize> {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    };
    let encode = |t: &[usize]| t.iter().fold(0, |acc, &x| acc * n + x);
    let mut next = 0u32;
    for start in 0..total {
        if label[start] != u32::MAX {
            continue;
        }
        label[start] = next;
        let mut stack = vec![start];
        while let Some(code) = stack.pop() {
            let t = decode(code);
            for g in gens {
                let img: Vec<usize> = t.iter().map(|&x| g.apply(x)).collect();
                let c = encode(&img);
                if label[c] == u32::MAX {
                    label[c] = next;
                    stack.push(c);
                }
            }
        }
        next += 1;
    }
    label
}

/// All `h ∈ Sym(n)` mapping every `k`-tuple into its orbit under `gens`.
pub fn closure_by_filtration(n: usize, gens: &[Permutation], k: usize) -> Result<Vec<Permutation>> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { degree: n, max: MAX_DEGREE });
    }
    let labels = tuple_orbit_labels(n, gens, k);
    let tuples: Vec<Vec<usize>> = (0..labels.len())
        .map(|mut code| {
            let mut t = vec![0; k];
            for slot in t.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            t
        })
        .collect();
    Ok(all_permutations(n)
        .into_iter()
        .filter(|h| {
            tuples.iter().enumerate().all(|(code, t)| {
                let img = t.iter().fold(0, |acc, &x| acc * n + h.apply(x));
                labels[img] == labels[code]
            })
        })
        .collect())
}

/// Elements of `⟨gens⟩` by breadth-first closure.
pub fn enumerate_group(n: usize, gens: &[Permutation], bound: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = out[i].compose(g)?;
            if seen.insert(y.clone()) {
                if out.len() >= bound {
                    return Err(Error::OrderTooLarge { order: format!("> {bound}"), bound: bound as u64 });
                }
                out.push(y);
            }
        }
        i += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn permutation_count() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(1).len(), 1);
    }

    #[test]
    fn small_closures() {
        let c3 = [p(3, "(1 2 3)")];
        assert_eq!(closure_by_filtration(3, &c3, 2).unwrap().len(), 3);
        let v = [p(4, "(1 2)(3 4)")];
        assert_eq!(closure_by_filtration(4, &v, 2).unwrap().len(), 2);
        let a5 = [p(5, "(1 2 3)"), p(5, "(1 2 3 4 5)")];
        assert_eq!(closure_by_filtration(5, &a5, 3).unwrap().len(), 120);
        assert_eq!(closure_by_filtration(5, &a5, 4).unwrap().len(), 60);
    }

    #[test]
    fn enumeration() {
        let a5 = [p(5, "(1 2 3)"), p(5, "(1 2 3 4 5)")];
        assert_eq!(enumerate_group(5, &a5, 1000).unwrap().len(), 60);
        assert!(enumerate_group(5, &a5, 10).is_err());
    }
}
