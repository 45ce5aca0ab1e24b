//! Factor tables for the published families. Terms are `(coeff, i, j)` for
//! `coeff · t1^i · t2^j`; single-parameter families use `t1` only.

use crate::poly::{Factor, Monomial};

macro_rules! factor {
    ($name:ident, $text:expr, [$(($c:expr, $i:expr, $j:expr)),* $(,)?]) => {
        pub const $name: Factor = Factor { name: $text, terms: &[$(($c, $i, $j)),*] };
    };
}

factor!(T1, "t1", [(1, 1, 0)]);
factor!(T2, "t2", [(1, 0, 1)]);
factor!(T1_SQ_PLUS_1, "t1^2 + 1", [(1, 2, 0), (1, 0, 0)]);
factor!(T2_SQ_PLUS_1, "t2^2 + 1", [(1, 0, 2), (1, 0, 0)]);
factor!(T1_PLUS_T2, "t1 + t2", [(1, 1, 0), (1, 0, 1)]);

// common circumradius + perimeter, two parameters

factor!(RP_G, "t1^4t2^4 + 3t1^4t2^2 + 4t1^3t2^3 + 3t1^2t2^4 + t1^4 + 2t1^3t2 + 3t1^2t2^2 + 2t1t2^3 + t2^4", [
    (1, 4, 4), (3, 4, 2), (4, 3, 3), (3, 2, 4), (1, 4, 0), (2, 3, 1), (3, 2, 2), (2, 1, 3), (1, 0, 4),
]);
factor!(RP_H, "4t1^6t2^6 + 5t1^6t2^4 - 2t1^5t2^5 + 5t1^4t2^6 + 3t1^6t2^2 - 2t1^5t2^3 + 2t1^4t2^4 - 2t1^3t2^5 + 3t1^2t2^6 + t1^6 - 2t1^3t2^3 + t2^6", [
    (4, 6, 6), (5, 6, 4), (-2, 5, 5), (5, 4, 6), (3, 6, 2), (-2, 5, 3), (2, 4, 4), (-2, 3, 5),
    (3, 2, 6), (1, 6, 0), (-2, 3, 3), (1, 0, 6),
]);
factor!(RP_Q, "t1^2t2^2 + t1^2 + t1t2 + t2^2", [(1, 2, 2), (1, 2, 0), (1, 1, 1), (1, 0, 2)]);
factor!(RP_W, "3t1^4t2^4 + 3t1^4t2^2 + 3t1^2t2^4 + t1^4 + t1^2t2^2 + t2^4", [
    (3, 4, 4), (3, 4, 2), (3, 2, 4), (1, 4, 0), (1, 2, 2), (1, 0, 4),
]);
factor!(RP_B1, "3t1^5t2^4 + t1^4t2^5 + 3t1^5t2^2 + t1^4t2^3 + t1^3t2^4 - t1^2t2^5 + t1^5 + t1^4t2 + t1^3t2^2 - t1^2t2^3 - t1t2^4 - t2^5", [
    (3, 5, 4), (1, 4, 5), (3, 5, 2), (1, 4, 3), (1, 3, 4), (-1, 2, 5), (1, 5, 0), (1, 4, 1),
    (1, 3, 2), (-1, 2, 3), (-1, 1, 4), (-1, 0, 5),
]);
factor!(RP_C1, "2t1^6t2^5 + 2t1^6t2^3 - t1^5t2^4 + 3t1^4t2^5 - 3t1^5t2^2 + t1^4t2^3 + t1^3t2^4 + 3t1^2t2^5 - t1^5 - t1^4t2 - t1^3t2^2 + t1^2t2^3 + t1t2^4 + t2^5", [
    (2, 6, 5), (2, 6, 3), (-1, 5, 4), (3, 4, 5), (-3, 5, 2), (1, 4, 3), (1, 3, 4), (3, 2, 5),
    (-1, 5, 0), (-1, 4, 1), (-1, 3, 2), (1, 2, 3), (1, 1, 4), (1, 0, 5),
]);
factor!(RP_B2, "t1^5t2^4 + 3t1^4t2^5 - t1^5t2^2 + t1^4t2^3 + t1^3t2^4 + 3t1^2t2^5 - t1^5 - t1^4t2 - t1^3t2^2 + t1^2t2^3 + t1t2^4 + t2^5", [
    (1, 5, 4), (3, 4, 5), (-1, 5, 2), (1, 4, 3), (1, 3, 4), (3, 2, 5), (-1, 5, 0), (-1, 4, 1),
    (-1, 3, 2), (1, 2, 3), (1, 1, 4), (1, 0, 5),
]);
factor!(RP_C2, "2t1^5t2^6 + 3t1^5t2^4 - t1^4t2^5 + 2t1^3t2^6 + 3t1^5t2^2 + t1^4t2^3 + t1^3t2^4 - 3t1^2t2^5 + t1^5 + t1^4t2 + t1^3t2^2 - t1^2t2^3 - t1t2^4 - t2^5", [
    (2, 5, 6), (3, 5, 4), (-1, 4, 5), (2, 3, 6), (3, 5, 2), (1, 4, 3), (1, 3, 4), (-3, 2, 5),
    (1, 5, 0), (1, 4, 1), (1, 3, 2), (-1, 2, 3), (-1, 1, 4), (-1, 0, 5),
]);

pub const RP_SIDES: [[Monomial; 3]; 2] = [
    [
        Monomial { coeff: 1, factors: &[(T1, 1), (T2_SQ_PLUS_1, 1), (RP_G, 1), (RP_H, 1)] },
        Monomial { coeff: 2, factors: &[(T1, 1), (T2, 3), (T1_SQ_PLUS_1, 2), (T2_SQ_PLUS_1, 1), (RP_Q, 1), (RP_B1, 1)] },
        Monomial { coeff: 1, factors: &[(T1, 1), (T1_PLUS_T2, 1), (T2_SQ_PLUS_1, 1), (RP_W, 1), (RP_C1, 1)] },
    ],
    [
        Monomial { coeff: 1, factors: &[(T2, 1), (T1_SQ_PLUS_1, 1), (RP_G, 1), (RP_H, 1)] },
        Monomial { coeff: 2, factors: &[(T1, 3), (T2, 1), (T1_SQ_PLUS_1, 1), (T2_SQ_PLUS_1, 2), (RP_Q, 1), (RP_B2, 1)] },
        Monomial { coeff: 1, factors: &[(T2, 1), (T1_PLUS_T2, 1), (T1_SQ_PLUS_1, 1), (RP_W, 1), (RP_C2, 1)] },
    ],
];

/// Circumradius numerator over 4.
pub const RP_CIRCUMRADIUS: (Monomial, i64) = (
    Monomial { coeff: 1, factors: &[(T1_SQ_PLUS_1, 1), (T2_SQ_PLUS_1, 1), (RP_G, 1), (RP_H, 1)] },
    4,
);
pub const RP_PERIMETER: Monomial = Monomial {
    coeff: 4,
    factors: &[(T1, 3), (T2, 3), (T1_PLUS_T2, 1), (T1_SQ_PLUS_1, 1), (T2_SQ_PLUS_1, 1), (RP_Q, 1), (RP_W, 1)],
};

// circumradius + perimeter with t2 = 1 (second triangle right)

factor!(T1_PLUS_1, "t1 + 1", [(1, 1, 0), (1, 0, 0)]);
factor!(RPR_K, "5t1^4 + 6t1^3 + 6t1^2 + 2t1 + 1", [(5, 4, 0), (6, 3, 0), (6, 2, 0), (2, 1, 0), (1, 0, 0)]);
factor!(RPR_L, "13t1^6 - 4t1^5 + 7t1^4 - 4t1^3 + 3t1^2 + 1", [
    (13, 6, 0), (-4, 5, 0), (7, 4, 0), (-4, 3, 0), (3, 2, 0), (1, 0, 0),
]);
factor!(RPR_Q, "2t1^2 + t1 + 1", [(2, 2, 0), (1, 1, 0), (1, 0, 0)]);
factor!(RPR_B1, "7t1^5 + 3t1^4 + 2t1^3 - 2t1^2 - t1 - 1", [
    (7, 5, 0), (3, 4, 0), (2, 3, 0), (-2, 2, 0), (-1, 1, 0), (-1, 0, 0),
]);
factor!(RPR_W, "7t1^4 + 4t1^2 + 1", [(7, 4, 0), (4, 2, 0), (1, 0, 0)]);
factor!(RPR_C1, "4t1^6 - 5t1^5 + 3t1^4 + 4t1^2 + t1 + 1", [
    (4, 6, 0), (-5, 5, 0), (3, 4, 0), (4, 2, 0), (1, 1, 0), (1, 0, 0),
]);
factor!(RPR_B2, "t1^5 - 3t1^4 - 4t1^2 - t1 - 1", [
    (1, 5, 0), (-3, 4, 0), (-4, 2, 0), (-1, 1, 0), (-1, 0, 0),
]);
factor!(RPR_C2, "9t1^5 + t1^4 + 4t1^3 - 4t1^2 - t1 - 1", [
    (9, 5, 0), (1, 4, 0), (4, 3, 0), (-4, 2, 0), (-1, 1, 0), (-1, 0, 0),
]);

pub const RP_RIGHT_SIDES: [[Monomial; 3]; 2] = [
    [
        Monomial { coeff: 2, factors: &[(T1, 1), (RPR_K, 1), (RPR_L, 1)] },
        Monomial { coeff: 4, factors: &[(T1, 1), (T1_SQ_PLUS_1, 2), (RPR_Q, 1), (RPR_B1, 1)] },
        Monomial { coeff: 2, factors: &[(T1, 1), (T1_PLUS_1, 1), (RPR_W, 1), (RPR_C1, 1)] },
    ],
    [
        Monomial { coeff: 1, factors: &[(T1_SQ_PLUS_1, 1), (RPR_K, 1), (RPR_L, 1)] },
        Monomial { coeff: -8, factors: &[(T1, 3), (T1_SQ_PLUS_1, 1), (RPR_Q, 1), (RPR_B2, 1)] },
        Monomial { coeff: 1, factors: &[(T1_PLUS_1, 1), (T1_SQ_PLUS_1, 1), (RPR_W, 1), (RPR_C2, 1)] },
    ],
];

pub const RP_RIGHT_CIRCUMRADIUS: (Monomial, i64) = (
    Monomial { coeff: 1, factors: &[(T1_SQ_PLUS_1, 1), (RPR_K, 1), (RPR_L, 1)] },
    2,
);
pub const RP_RIGHT_PERIMETER: Monomial = Monomial {
    coeff: 8,
    factors: &[(T1, 3), (T1_PLUS_1, 1), (T1_SQ_PLUS_1, 1), (RPR_Q, 1), (RPR_W, 1)],
};

// common circumradius + inradius

factor!(RR_E, "t1^2t2^2 + t1^2 - 8t1t2 + t2^2 + 9", [(1, 2, 2), (1, 2, 0), (-8, 1, 1), (1, 0, 2), (9, 0, 0)]);
factor!(RR_U, "t1t2^2 - t1 - 2t2", [(1, 1, 2), (-1, 1, 0), (-2, 0, 1)]);
factor!(RR_V, "t1^2t2 - 2t1 - t2", [(1, 2, 1), (-2, 1, 0), (-1, 0, 1)]);
factor!(RR_B1, "2t1t2 - t2^2 - 3", [(2, 1, 1), (-1, 0, 2), (-3, 0, 0)]);
factor!(RR_C1, "t1^2t2^2 - t1^2 - 4t1t2 + t2^2 + 3", [(1, 2, 2), (-1, 2, 0), (-4, 1, 1), (1, 0, 2), (3, 0, 0)]);
factor!(RR_B2, "t1^2 - 2t1t2 + 3", [(1, 2, 0), (-2, 1, 1), (3, 0, 0)]);
factor!(RR_C2, "t1^2t2^2 + t1^2 - 4t1t2 - t2^2 + 3", [(1, 2, 2), (1, 2, 0), (-4, 1, 1), (-1, 0, 2), (3, 0, 0)]);

pub const RR_SIDES: [[Monomial; 3]; 2] = [
    [
        Monomial { coeff: 1, factors: &[(T1, 1), (T2_SQ_PLUS_1, 1), (RR_E, 1)] },
        Monomial { coeff: -1, factors: &[(RR_U, 1), (T1_SQ_PLUS_1, 1), (RR_B1, 1)] },
        Monomial { coeff: -2, factors: &[(RR_C1, 1), (RR_V, 1)] },
    ],
    [
        Monomial { coeff: 1, factors: &[(T2, 1), (T1_SQ_PLUS_1, 1), (RR_E, 1)] },
        Monomial { coeff: 1, factors: &[(RR_V, 1), (T2_SQ_PLUS_1, 1), (RR_B2, 1)] },
        Monomial { coeff: -2, factors: &[(RR_C2, 1), (RR_U, 1)] },
    ],
];

pub const RR_CIRCUMRADIUS: (Monomial, i64) = (
    Monomial { coeff: 1, factors: &[(T1_SQ_PLUS_1, 1), (T2_SQ_PLUS_1, 1), (RR_E, 1)] },
    4,
);
pub const RR_INRADIUS: Monomial = Monomial { coeff: 2, factors: &[(RR_U, 1), (RR_V, 1)] };

// circumradius + inradius with t2 = 1

factor!(T1_MINUS_1, "t1 - 1", [(1, 1, 0), (-1, 0, 0)]);
factor!(T1_MINUS_2, "t1 - 2", [(1, 1, 0), (-2, 0, 0)]);
factor!(RRR_E, "t1^2 - 4t1 + 5", [(1, 2, 0), (-4, 1, 0), (5, 0, 0)]);
factor!(RRR_U, "t1^2 - 2t1 - 1", [(1, 2, 0), (-2, 1, 0), (-1, 0, 0)]);
factor!(RRR_B2, "t1^2 - 2t1 + 3", [(1, 2, 0), (-2, 1, 0), (3, 0, 0)]);

pub const RR_RIGHT_SIDES: [[Monomial; 3]; 2] = [
    [
        Monomial { coeff: 2, factors: &[(T1, 1), (RRR_E, 1)] },
        Monomial { coeff: 2, factors: &[(T1_SQ_PLUS_1, 1), (T1_MINUS_2, 1)] },
        Monomial { coeff: 4, factors: &[(T1_MINUS_1, 1), (RRR_U, 1)] },
    ],
    [
        Monomial { coeff: 1, factors: &[(T1_SQ_PLUS_1, 1), (RRR_E, 1)] },
        Monomial { coeff: 1, factors: &[(RRR_U, 1), (RRR_B2, 1)] },
        Monomial { coeff: 4, factors: &[(T1_MINUS_1, 2)] },
    ],
];

pub const RR_RIGHT_CIRCUMRADIUS: (Monomial, i64) = (
    Monomial { coeff: 1, factors: &[(T1_SQ_PLUS_1, 1), (RRR_E, 1)] },
    2,
);
pub const RR_RIGHT_INRADIUS: Monomial = Monomial { coeff: 2, factors: &[(RRR_U, 1)] };

// common circumradius + area, parameter t (stored as t1)

factor!(RA_F_PLUS, "t^8 + 8t^7 + 20t^6 - 56t^5 - 26t^4 + 56t^3 + 20t^2 - 8t + 1", [
    (1, 8, 0), (8, 7, 0), (20, 6, 0), (-56, 5, 0), (-26, 4, 0), (56, 3, 0), (20, 2, 0), (-8, 1, 0), (1, 0, 0),
]);
factor!(RA_F_MINUS, "t^8 - 8t^7 + 20t^6 + 56t^5 - 26t^4 - 56t^3 + 20t^2 + 8t + 1", [
    (1, 8, 0), (-8, 7, 0), (20, 6, 0), (56, 5, 0), (-26, 4, 0), (-56, 3, 0), (20, 2, 0), (8, 1, 0), (1, 0, 0),
]);
factor!(RA_T, "t", [(1, 1, 0)]);
factor!(RA_T_MINUS_1, "t - 1", [(1, 1, 0), (-1, 0, 0)]);
factor!(RA_T_PLUS_1, "t + 1", [(1, 1, 0), (1, 0, 0)]);
factor!(RA_T_SQ_PLUS_1, "t^2 + 1", [(1, 2, 0), (1, 0, 0)]);
factor!(RA_P, "t^4 - 2t^2 + 5", [(1, 4, 0), (-2, 2, 0), (5, 0, 0)]);
factor!(RA_Q, "5t^4 - 2t^2 + 1", [(5, 4, 0), (-2, 2, 0), (1, 0, 0)]);
factor!(RA_M, "t^4 - 4t^3 + 10t^2 - 4t + 1", [(1, 4, 0), (-4, 3, 0), (10, 2, 0), (-4, 1, 0), (1, 0, 0)]);
factor!(RA_N, "t^4 + 4t^3 + 10t^2 + 4t + 1", [(1, 4, 0), (4, 3, 0), (10, 2, 0), (4, 1, 0), (1, 0, 0)]);
factor!(RA_C, "t^16 + 104t^14 - 548t^12 + 3032t^10 - 4922t^8 + 3032t^6 - 548t^4 + 104t^2 + 1", [
    (1, 16, 0), (104, 14, 0), (-548, 12, 0), (3032, 10, 0), (-4922, 8, 0), (3032, 6, 0),
    (-548, 4, 0), (104, 2, 0), (1, 0, 0),
]);
factor!(RA_D1, "3t^4 - 6t^2 - 1", [(3, 4, 0), (-6, 2, 0), (-1, 0, 0)]);
factor!(RA_D2, "t^4 + 6t^2 - 3", [(1, 4, 0), (6, 2, 0), (-3, 0, 0)]);
factor!(RA_D3, "t^4 - 4t^3 - 6t^2 - 4t + 1", [(1, 4, 0), (-4, 3, 0), (-6, 2, 0), (-4, 1, 0), (1, 0, 0)]);
factor!(RA_D4, "t^4 + 4t^3 - 6t^2 + 4t + 1", [(1, 4, 0), (4, 3, 0), (-6, 2, 0), (4, 1, 0), (1, 0, 0)]);

pub const RA_SIDES: [[Monomial; 3]; 2] = [
    [
        Monomial { coeff: 2, factors: &[(RA_T, 1), (RA_P, 1), (RA_Q, 1), (RA_F_PLUS, 1)] },
        Monomial { coeff: 1, factors: &[(RA_T_MINUS_1, 1), (RA_T_PLUS_1, 1), (RA_M, 1), (RA_N, 1), (RA_F_MINUS, 1)] },
        Monomial { coeff: 1, factors: &[(RA_T_SQ_PLUS_1, 1), (RA_C, 1)] },
    ],
    [
        Monomial { coeff: 1, factors: &[(RA_T_MINUS_1, 1), (RA_T_PLUS_1, 1), (RA_M, 1), (RA_N, 1), (RA_F_PLUS, 1)] },
        Monomial { coeff: 2, factors: &[(RA_T, 1), (RA_P, 1), (RA_Q, 1), (RA_F_MINUS, 1)] },
        Monomial { coeff: 1, factors: &[(RA_T_SQ_PLUS_1, 1), (RA_C, 1)] },
    ],
];

pub const RA_CIRCUMRADIUS_NUM: Monomial = Monomial {
    coeff: 1,
    factors: &[
        (RA_T_SQ_PLUS_1, 1), (RA_P, 1), (RA_Q, 1), (RA_M, 1), (RA_N, 1), (RA_F_PLUS, 1), (RA_F_MINUS, 1),
    ],
};
pub const RA_CIRCUMRADIUS_DEN: Monomial = Monomial {
    coeff: 2,
    factors: &[(RA_D1, 1), (RA_D2, 1), (RA_D3, 1), (RA_D4, 1)],
};
pub const RA_AREA: Monomial = Monomial {
    coeff: 1,
    factors: &[
        (RA_T, 1), (RA_T_MINUS_1, 1), (RA_T_PLUS_1, 1), (RA_D1, 1), (RA_D2, 1), (RA_D3, 1), (RA_D4, 1), (RA_C, 1),
    ],
};
