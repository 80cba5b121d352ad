//! Journal counts (census 2011, ages 1..=5) and the printed indicator table they produce.

#![allow(dead_code)]

pub struct Row {
    pub journal: &'static str,
    pub category: &'static str,
    pub citations: [u32; 5],
    pub items: [u32; 5],
}

pub const COUNTS: [Row; 24] = [
    Row {
        journal: "AIAA J",
        category: "EA",
        citations: [239, 354, 474, 418, 467],
        items: [275, 286, 301, 311, 356],
    },
    Row {
        journal: "AM NAT",
        category: "E",
        citations: [663, 1052, 1028, 1159, 1003],
        items: [171, 192, 190, 197, 179],
    },
    Row {
        journal: "ANN NY ACAD SCI",
        category: "MS",
        citations: [2505, 3382, 3827, 2947, 3193],
        items: [702, 1164, 975, 1034, 1415],
    },
    Row {
        journal: "ASTRON ASTROPHYS",
        category: "A&A",
        citations: [8657, 8330, 6992, 7174, 6270],
        items: [1916, 1787, 1789, 1977, 1935],
    },
    Row {
        journal: "ASTROPHYS J",
        category: "A&A",
        citations: [14641, 17267, 12160, 11738, 10412],
        items: [2501, 2796, 2128, 2848, 2707],
    },
    Row {
        journal: "BIOL PHILOS",
        category: "H&PS",
        citations: [66, 29, 39, 59, 49],
        items: [39, 40, 36, 35, 28],
    },
    Row {
        journal: "BIOMETRIKA",
        category: "B",
        citations: [103, 203, 222, 246, 225],
        items: [79, 81, 75, 74, 79],
    },
    Row {
        journal: "BRIT J PHILOS SCI",
        category: "H&PS",
        citations: [27, 41, 59, 38, 45],
        items: [31, 31, 32, 32, 28],
    },
    Row {
        journal: "ECOLOGY",
        category: "E",
        citations: [1292, 2073, 2317, 2227, 2237],
        items: [357, 337, 345, 317, 333],
    },
    Row {
        journal: "ECONOMETRICA",
        category: "MIA",
        citations: [136, 239, 228, 326, 373],
        items: [65, 61, 47, 51, 53],
    },
    Row {
        journal: "EXP HEMATOL",
        category: "MR&E",
        citations: [308, 485, 627, 644, 570],
        items: [127, 146, 172, 214, 194],
    },
    Row {
        journal: "FASEB J",
        category: "B",
        citations: [2348, 2633, 2845, 2655, 3200],
        items: [462, 410, 412, 388, 486],
    },
    Row {
        journal: "HIST SCI",
        category: "H&PS",
        citations: [9, 15, 12, 12, 10],
        items: [17, 19, 14, 17, 16],
    },
    Row {
        journal: "IEEE T AERO ELEC SYS",
        category: "EA",
        citations: [124, 163, 216, 270, 302],
        items: [136, 126, 128, 133, 117],
    },
    Row {
        journal: "J ECONOMETRICS",
        category: "MIA",
        citations: [156, 165, 435, 541, 448],
        items: [139, 99, 161, 176, 124],
    },
    Row {
        journal: "J GUID CONTROL DYNAM",
        category: "EA",
        citations: [151, 213, 261, 268, 208],
        items: [187, 200, 183, 203, 177],
    },
    Row {
        journal: "LIFE SCI",
        category: "MR&E",
        citations: [538, 675, 883, 1364, 1919],
        items: [228, 252, 289, 498, 702],
    },
    Row {
        journal: "P NATL ACAD SCI USA",
        category: "MS",
        citations: [31558, 41331, 39642, 38547, 35707],
        items: [3764, 3765, 3508, 3494, 3306],
    },
    Row {
        journal: "P ROY SOC A-MATH PHY",
        category: "MS",
        citations: [397, 346, 323, 453, 359],
        items: [183, 194, 175, 197, 196],
    },
    Row {
        journal: "PHYS REV D",
        category: "A&A",
        citations: [13330, 12498, 11508, 8183, 7528],
        items: [2854, 2813, 2863, 2268, 2375],
    },
    Row {
        journal: "PLOS ONE",
        category: "B",
        citations: [22741, 22780, 15676, 7041, 765],
        items: [6722, 4403, 2717, 1230, 137],
    },
    Row {
        journal: "STRUCT EQU MODELING",
        category: "MIA",
        citations: [99, 193, 98, 308, 374],
        items: [31, 31, 30, 29, 28],
    },
    Row {
        journal: "TRENDS ECOL EVOL",
        category: "E",
        citations: [965, 1476, 1527, 1468, 1594],
        items: [75, 80, 92, 89, 78],
    },
    Row {
        journal: "VACCINE",
        category: "MR&E",
        citations: [3729, 4702, 3787, 3536, 3182],
        items: [1105, 1134, 905, 1046, 928],
    },
];

/// R_1, R_2, R_3, R_4, 2M-JIF, 5-JIF as printed (3 decimals), then maturity time.
pub const PRINTED: [(&str, [&str; 6], u32); 24] = [
    (
        "AIAA J",
        ["1.057", "1.411", "1.458", "1.327", "1.458", "1.277"],
        4,
    ),
    (
        "AM NAT",
        ["4.725", "5.445", "5.651", "5.750", "5.750", "5.280"],
        5,
    ),
    (
        "ANN NY ACAD SCI",
        ["3.155", "3.370", "3.372", "2.507", "3.372", "2.997"],
        4,
    ),
    (
        "ASTRON ASTROPHYS",
        ["4.587", "4.285", "3.762", "3.437", "4.587", "3.979"],
        2,
    ),
    (
        "ASTROPHYS J",
        ["6.024", "5.976", "4.803", "3.987", "6.024", "5.102"],
        2,
    ),
    (
        "BIOL PHILOS",
        ["1.203", "0.895", "1.380", "1.714", "1.714", "1.360"],
        5,
    ),
    (
        "BIOMETRIKA",
        ["1.913", "2.724", "3.141", "3.078", "3.141", "2.575"],
        4,
    ),
    (
        "BRIT J PHILOS SCI",
        ["1.097", "1.587", "1.516", "1.383", "1.587", "1.364"],
        3,
    ),
    (
        "ECOLOGY",
        ["4.849", "6.437", "6.864", "6.868", "6.868", "6.007"],
        5,
    ),
    (
        "ECONOMETRICA",
        ["2.976", "4.324", "5.653", "6.721", "6.721", "4.700"],
        5,
    ),
    (
        "EXP HEMATOL",
        ["2.905", "3.497", "3.293", "2.975", "3.497", "3.088"],
        3,
    ),
    (
        "FASEB J",
        ["5.712", "6.664", "6.875", "6.699", "6.875", "6.340"],
        4,
    ),
    (
        "HIST SCI",
        ["0.667", "0.818", "0.774", "0.667", "0.818", "0.699"],
        3,
    ),
    (
        "IEEE T AERO ELEC SYS",
        ["1.095", "1.492", "1.862", "2.288", "2.288", "1.680"],
        5,
    ),
    (
        "J ECONOMETRICS",
        ["1.349", "2.308", "2.896", "3.297", "3.297", "2.496"],
        5,
    ),
    (
        "J GUID CONTROL DYNAM",
        ["0.941", "1.238", "1.370", "1.253", "1.370", "1.159"],
        4,
    ),
    (
        "LIFE SCI",
        ["2.527", "2.880", "2.855", "2.736", "2.880", "2.732"],
        3,
    ),
    (
        "P NATL ACAD SCI USA",
        ["9.681", "11.133", "11.167", "10.920", "11.167", "10.472"],
        4,
    ),
    (
        "P ROY SOC A-MATH PHY",
        ["1.971", "1.813", "2.086", "2.066", "2.086", "1.987"],
        4,
    ),
    (
        "PHYS REV D",
        ["4.558", "4.229", "3.838", "3.384", "4.558", "4.027"],
        2,
    ),
    (
        "PLOS ONE",
        ["4.092", "5.401", "5.756", "5.710", "5.756", "4.537"],
        4,
    ),
    (
        "STRUCT EQU MODELING",
        ["4.710", "4.770", "6.881", "11.965", "11.965", "7.195"],
        5,
    ),
    (
        "TRENDS ECOL EVOL",
        ["15.748", "17.459", "16.547", "18.335", "18.335", "16.981"],
        5,
    ),
    (
        "VACCINE",
        ["3.766", "4.163", "3.753", "3.403", "4.163", "3.700"],
        3,
    ),
];
