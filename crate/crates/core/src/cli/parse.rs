use crate::bijection::IncreasingSubsequence;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::spin::SpinConfig;

fn parse_integers(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("non-integer token '{t}'")))
        })
        .collect()
}

/// Accepts `"2,3,1"`, `"2 3 1"` or any mix of commas and whitespace.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    Permutation::new(parse_integers(text)?)
}

/// Sign string of length `n`: `"+-+"` is `(1, -1, 1)`.
pub fn parse_config(text: &str, n: usize) -> Result<SpinConfig> {
    SpinConfig::parse_signs(text.trim(), n)
}

/// Values of an increasing subsequence of `rho`; an empty string or `"()"`
/// is the empty subsequence.
pub fn parse_subsequence(text: &str, rho: &Permutation) -> Result<IncreasingSubsequence> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    IncreasingSubsequence::new(rho, parse_integers(trimmed)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        assert_eq!(parse_permutation("2,3,1").unwrap().values(), &[2, 3, 1]);
        assert_eq!(
            parse_permutation("2 4 3 5 1").unwrap().values(),
            &[2, 4, 3, 5, 1]
        );
        assert_eq!(parse_permutation(" 2, 1 ").unwrap().values(), &[2, 1]);
        assert_eq!(
            parse_permutation("2,2,1").unwrap_err(),
            Error::DuplicateValue(2)
        );
        assert!(matches!(parse_permutation("2,x,1"), Err(Error::Parse(_))));
        assert!(matches!(parse_permutation("-1,1"), Err(Error::Parse(_))));
    }

    #[test]
    fn configs() {
        assert_eq!(parse_config("---", 3).unwrap(), SpinConfig::alpha(3));
        assert_eq!(parse_config("+-+", 3).unwrap().values(), vec![1, -1, 1]);
        assert_eq!(
            parse_config("+0-", 3).unwrap_err().to_string(),
            "illegal character '0'"
        );
        assert!(matches!(
            parse_config("++", 3),
            Err(Error::WrongLength { .. })
        ));
    }

    #[test]
    fn subsequences() {
        let rho = parse_permutation("2,4,3,5,1").unwrap();
        assert_eq!(
            parse_subsequence("2,4,5", &rho).unwrap().values(),
            &[2, 4, 5]
        );
        assert_eq!(
            parse_subsequence("(2,4,5)", &rho).unwrap().values(),
            &[2, 4, 5]
        );
        assert!(parse_subsequence("", &rho).unwrap().is_empty());
        assert!(parse_subsequence("()", &rho).unwrap().is_empty());
        assert!(matches!(
            parse_subsequence("4,3", &rho),
            Err(Error::NotIncreasing(_))
        ));
    }
}
