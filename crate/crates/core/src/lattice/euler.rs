use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Euler zigzag numbers `E_0..=E_n` (`tan x + sec x = Σ E_n x^n / n!`)
/// from the boustrophedon triangle.
pub fn euler_numbers(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::zero());
        for x in row.iter().rev() {
            let v = next.last().expect("non-empty") + x;
            next.push(v);
        }
        out.push(next.last().expect("non-empty").clone());
        row = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let expected = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521];
        let got = euler_numbers(10);
        for (g, e) in got.iter().zip(expected) {
            assert_eq!(*g, BigInt::from(e));
        }
    }

    #[test]
    fn tangent_series_oracle() {
        // Odd-index values against tan x = sin x / cos x computed with
        // exact rational series arithmetic.
        use num_rational::BigRational;
        let n = 15usize;
        let mut fact = vec![BigInt::one()];
        for i in 1..=n {
            let f = &fact[i - 1] * BigInt::from(i);
            fact.push(f);
        }
        let mut sin = vec![BigRational::zero(); n + 1];
        let mut cos = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            let sign = if (i / 2) % 2 == 0 { 1 } else { -1 };
            let v = BigRational::new(BigInt::from(sign), fact[i].clone());
            if i % 2 == 1 {
                sin[i] = v;
            } else {
                cos[i] = v;
            }
        }
        let mut tan = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            let mut acc = sin[i].clone();
            for j in 1..=i {
                acc -= &cos[j] * &tan[i - j];
            }
            tan[i] = acc;
        }
        let e = euler_numbers(n);
        for i in (1..=n).step_by(2) {
            let scaled = &tan[i] * BigRational::from_integer(fact[i].clone());
            assert_eq!(scaled, BigRational::from_integer(e[i].clone()));
        }
    }
}
