//! Seeded random words. All sampling goes through ChaCha8 so that a seed
//! produces the same words on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{ArtinLetter, ArtinWord, Letter, Sign, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Uniform word of length `len` in the twelve signed letters.
pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> Word {
    Word((0..len).map(|_| Letter::from_index(rng.gen_range(0..12))).collect())
}

/// Word of length in `0..=max_len` in the twelve signed letters.
pub fn random_word_upto<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word(rng, len)
}

pub fn random_artin_word<R: Rng>(rng: &mut R, len: usize) -> ArtinWord {
    ArtinWord((0..len).map(|_| ArtinLetter::new(rng.gen_range(0..3), sign(rng))).collect())
}

/// Rewrites `w` by `steps` random applications of the Artin relations
/// (`aba↔bab`, `bcb↔cbc`, `ac↔ca`) and free cancellations, never growing
/// past `max_len`. The result represents the same braid.
pub fn scramble<R: Rng>(rng: &mut R, w: &ArtinWord, steps: usize, max_len: usize) -> ArtinWord {
    let mut v = w.0.clone();
    for _ in 0..steps {
        let choice = rng.gen_range(0..4);
        match choice {
            0 if v.len() + 2 <= max_len => {
                let pos = rng.gen_range(0..=v.len());
                let l = ArtinLetter::new(rng.gen_range(0..3), sign(rng));
                v.splice(pos..pos, [l, l.inverse()]);
            }
            1 => {
                // free cancellation
                if let Some(p) = (0..v.len().saturating_sub(1))
                    .find(|&p| v[p].index == v[p + 1].index && v[p].sign != v[p + 1].sign)
                {
                    v.drain(p..p + 2);
                }
            }
            2 => {
                // braid relation on three consecutive equal-sign letters
                let starts: Vec<usize> = (0..v.len().saturating_sub(2))
                    .filter(|&p| {
                        let (x, y, z) = (v[p], v[p + 1], v[p + 2]);
                        x == z
                            && x.sign == y.sign
                            && x.index.abs_diff(y.index) == 1
                    })
                    .collect();
                if !starts.is_empty() {
                    let p = starts[rng.gen_range(0..starts.len())];
                    let (x, y) = (v[p], v[p + 1]);
                    v[p] = y;
                    v[p + 1] = x;
                    v[p + 2] = y;
                }
            }
            _ => {
                // commutation of a and c
                let starts: Vec<usize> = (0..v.len().saturating_sub(1))
                    .filter(|&p| v[p].index.abs_diff(v[p + 1].index) == 2)
                    .collect();
                if !starts.is_empty() {
                    let p = starts[rng.gen_range(0..starts.len())];
                    v.swap(p, p + 1);
                }
            }
        }
    }
    ArtinWord(v)
}

/// A mixed sample of Artin words of length at most `max_len`: one third
/// uniform, one third trivial by construction (`u · scramble(u)⁻¹`), one
/// third a trivial word with one letter altered.
pub fn oracle_sample<R: Rng>(rng: &mut R, max_len: usize) -> ArtinWord {
    match rng.gen_range(0..3) {
        0 => {
            let len = rng.gen_range(0..=max_len);
            random_artin_word(rng, len)
        }
        kind => {
            let half = max_len / 2;
            let len = rng.gen_range(0..=half.saturating_sub(2));
            let u = random_artin_word(rng, len);
            let v = scramble(rng, &u, 12, half);
            let mut t = u.multiply(&v.invert());
            if kind == 2 && !t.is_empty() {
                let p = rng.gen_range(0..t.len());
                t.0[p] = ArtinLetter::new((t.0[p].index + 1) % 3, t.0[p].sign);
            }
            t
        }
    }
}
