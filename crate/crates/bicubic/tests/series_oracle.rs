use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use bicubic::series::{f_closed, g_sequence, partial_bell, verify_functional_equation, BellTable};

/// All set partitions of `0..n`, as block-size lists.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    // restricted growth strings
    fn go(i: usize, n: usize, blocks: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] += 1;
            go(i + 1, n, blocks, out);
            blocks[b] -= 1;
        }
        blocks.push(1);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn brute_bell(n: usize, k: usize, x: &[BigRational]) -> BigRational {
    partitions(n)
        .into_iter()
        .filter(|p| p.len() == k)
        .map(|p| p.iter().fold(BigRational::one(), |acc, &s| acc * &x[s - 1]))
        .fold(BigRational::zero(), |a, b| a + b)
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn partition_counts_are_bell_numbers() {
    let bell: Vec<usize> = (0..=7).map(|n| partitions(n).len()).collect();
    assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203, 877]);
}

#[test]
fn partial_bell_matches_set_partitions() {
    let args: Vec<BigRational> = (1..=7).map(|i| q(2 * i - 5, i + 1)).collect();
    let table = BellTable::new(&args, 7).unwrap();
    for n in 1..=7 {
        for k in 1..=n {
            let brute = brute_bell(n, k, &args);
            assert_eq!(partial_bell(n, k, &args).unwrap(), brute, "B({n},{k})");
            assert_eq!(table.get(n, k).unwrap(), &brute);
        }
        assert_eq!(partial_bell(n, 1, &args).unwrap(), args[n - 1]);
        let x1n = (0..n).fold(BigRational::one(), |acc, _| acc * &args[0]);
        assert_eq!(partial_bell(n, n, &args).unwrap(), x1n);
    }
    assert_eq!(partial_bell(3, 2, &args).unwrap(), q(3, 1) * &args[0] * &args[1]);
}

/// `g` by reverting `y = x (1 + F(x))^3` with plain integer polynomials.
fn g_by_reversion(order: usize) -> Vec<BigInt> {
    let mul = |a: &[BigInt], b: &[BigInt]| {
        let mut c = vec![BigInt::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                c[i + j] += &a[i] * &b[j];
            }
        }
        c
    };
    let mut one_f = vec![BigInt::zero(); order + 1];
    one_f[0] = BigInt::one();
    for (n, c) in one_f.iter_mut().enumerate().skip(1) {
        *c = f_closed(n as u32).unwrap();
    }
    let mut y = vec![BigInt::zero(); order + 1];
    let cube = mul(&mul(&one_f, &one_f), &one_f);
    y[1..].clone_from_slice(&cube[..order]);
    // powers y^k
    let mut powers = vec![vec![BigInt::zero(); order + 1]];
    powers[0][0] = BigInt::one();
    for k in 1..=order {
        let next = mul(&powers[k - 1], &y);
        powers.push(next);
    }
    // F = sum g_k y^k, solved degree by degree (y^k starts at x^k with coefficient 1)
    let mut g = vec![BigInt::zero(); order + 1];
    for n in 1..=order {
        let partial: BigInt = (1..n).map(|k| &g[k] * &powers[k][n]).sum();
        g[n] = &one_f[n] - partial;
    }
    g[1..].to_vec()
}

#[test]
fn bell_transform_agrees_with_series_reversion() {
    assert_eq!(g_sequence(15), g_by_reversion(15));
}

#[test]
fn functional_equation_through_fifteen() {
    for order in 1..=15 {
        assert!(verify_functional_equation(order), "order {order}");
    }
}

#[test]
fn zero_counts_match_forbidden_ascents() {
    let g = g_sequence(6);
    for n in [2, 3, 5] {
        assert!(g[n - 1].is_zero());
    }
}
