use serde::{Deserialize, Serialize};

/// Stated values for one representative's NFh histogram: point values and
/// an optional "zero from here on" tail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NfhClaim {
    pub fun: usize,
    pub points: Vec<(u32, u64)>,
    #[serde(default)]
    pub tail_zero_from: Option<u32>,
}

/// `|Fh_fun(r) ∩ S16|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S16Claim {
    pub fun: usize,
    pub r: u32,
    pub count: i64,
}

/// `|(g + Fh_fun(r)) ∩ S16|` for every `g ∈ Fh_fun(r)`: equal to `count`,
/// or below `below` when only a strict bound is stated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftClaim {
    pub fun: usize,
    pub r: u32,
    #[serde(default)]
    pub count: Option<i64>,
    #[serde(default)]
    pub below: Option<i64>,
}

/// Every constant the verifier compares against. `Default` holds the
/// published values; tests mutate single fields as negative controls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectations {
    pub g0_nl2: i64,
    pub g0_max_coset_nl: i64,
    /// nl2 of fun1..fun12.
    pub representative_nl2: [i64; 12],
    pub nfh: Vec<NfhClaim>,
    pub s16: Vec<S16Claim>,
    pub shifted: Vec<ShiftClaim>,
    /// Degree threshold and profile count of S16 ∩ Fh_fun2(16).
    pub fun2_profile: (usize, i64),
    /// Same for S16 ∩ Fh_fun4(16).
    pub fun4_profile: (usize, i64),
    /// Profile of every S16-filtered shift of Fh_fun2(26) at the given threshold.
    pub fun2_shift_profile: (usize, i64),
    /// Profile of every S16-filtered shift of Fh_fun7(25) at the given threshold.
    pub fun7_shift_profile: (usize, i64),
    pub witness_nl2: i64,
    /// Propagated RM(2,n) upper bounds for n = 8, 9, 10.
    pub propagated_upper: [i64; 3],
    /// Literature lower bounds for n = 8, 9, 10.
    pub table_lower: [i64; 3],
}

impl Default for Expectations {
    fn default() -> Self {
        let nfh = |fun: usize, points: &[(u32, u64)], tail: Option<u32>| NfhClaim {
            fun,
            points: points.to_vec(),
            tail_zero_from: tail,
        };
        let exact = |fun, r, count| ShiftClaim {
            fun,
            r,
            count: Some(count),
            below: None,
        };
        let bounded = |fun, r, below| ShiftClaim {
            fun,
            r,
            count: None,
            below: Some(below),
        };
        Self {
            g0_nl2: 18,
            g0_max_coset_nl: 22,
            representative_nl2: [16, 16, 16, 16, 16, 15, 15, 15, 15, 15, 15, 15],
            nfh: vec![
                nfh(1, &[(16, 448), (26, 0), (28, 64)], None),
                nfh(2, &[(16, 384), (26, 1024), (28, 0)], None),
                nfh(3, &[(16, 64)], Some(26)),
                nfh(4, &[(16, 224), (26, 512), (28, 0)], None),
                nfh(5, &[(16, 272)], Some(26)),
                nfh(6, &[(15, 112), (25, 0), (27, 64)], None),
                nfh(7, &[(15, 96), (25, 1024), (27, 0)], None),
                nfh(8, &[(15, 16)], Some(25)),
                nfh(9, &[(15, 72), (25, 512), (27, 0)], None),
                nfh(10, &[(15, 72), (25, 256), (27, 0)], None),
                nfh(11, &[(15, 40), (25, 544), (27, 0)], None),
                nfh(12, &[(15, 66), (25, 414), (27, 0)], None),
            ],
            s16: [
                (2, 16, 47),
                (4, 16, 43),
                (7, 15, 23),
                (9, 15, 15),
                (10, 15, 24),
                (11, 15, 21),
                (12, 15, 17),
            ]
            .into_iter()
            .map(|(fun, r, count)| S16Claim { fun, r, count })
            .collect(),
            shifted: vec![
                exact(1, 28, 7),
                exact(2, 26, 55),
                exact(4, 26, 21),
                exact(7, 25, 55),
                exact(9, 25, 21),
                exact(10, 25, 13),
                bounded(11, 25, 30),
                bounded(12, 25, 30),
            ],
            fun2_profile: (13, 45),
            fun4_profile: (12, 42),
            fun2_shift_profile: (13, 22),
            fun7_shift_profile: (12, 22),
            witness_nl2: 40,
            propagated_upper: [96, 216, 460],
            table_lower: [84, 196, 400],
        }
    }
}
