# mongeops/registry.py
# Catalog index: one dict per normal form, in presentation order.
# Each file lives in the catalog data directory (see config.catalog_path).

ENTRIES = [
    {
        "name": "WKI",
        "file": "wki.json",
        "n": 2,
        "segre": None,
        "description": "Nonlocal operator of the so(3) WKI flow.",
    },
    {
        "name": "[2D] general",
        "file": "2d_general.json",
        "n": 2,
        "segre": None,
        "description": "Every two-component Monge metric with its 2-form, constants symbolic.",
    },
    {
        "name": "[2D] a!=0 nondegenerate",
        "file": "2d_a_nondegenerate.json",
        "n": 2,
        "segre": None,
        "description": "Normal form of the nondegenerate a != 0 class.",
    },
    {
        "name": "[2D] a!=0 degenerate",
        "file": "2d_a_degenerate.json",
        "n": 2,
        "segre": None,
        "description": "Local operator of the degenerate a != 0 class.",
    },
    {
        "name": "[2D] a=0 gamma!=0",
        "file": "2d_a0_gamma.json",
        "n": 2,
        "segre": None,
        "description": "Nonlocal operator of the a = 0, gamma != 0 class.",
    },
    {
        "name": "[2D] a=0 gamma=0",
        "file": "2d_monge_ampere.json",
        "n": 2,
        "segre": None,
        "description": "Local Hamiltonian structure of the Monge-Ampere equations.",
    },
    {"name": "[(114)]", "file": "3d_114.json", "n": 3, "segre": "[(114)]",
     "description": "Local operator, double planes."},
    {"name": "[(123)]", "file": "3d_123.json", "n": 3, "segre": "[(123)]",
     "description": "Local operator, quadruple plane at infinity."},
    {"name": "[(222)]", "file": "3d_222.json", "n": 3, "segre": "[(222)]",
     "description": "Constant-coefficient local operator."},
    {"name": "[(15)]", "file": "3d_15.json", "n": 3, "segre": "[(15)]",
     "description": "Nonlocal operator, Cayley's ruled cubic."},
    {"name": "[(24)] first", "file": "3d_24_first.json", "n": 3, "segre": "[(24)]",
     "description": "Nonlocal operator, quadratic cone."},
    {"name": "[(24)] second", "file": "3d_24_second.json", "n": 3, "segre": "[(24)]",
     "description": "Nonlocal operator, pair of planes (dual subcase)."},
    {"name": "[(33)]", "file": "3d_33.json", "n": 3, "segre": "[(33)]",
     "description": "Nonlocal operator, plane and triple plane."},
    {"name": "[(11)22]", "file": "3d_11_22.json", "n": 3, "segre": "[(11)22]",
     "description": "Nonlocal operator, cubic and plane at infinity."},
    {"name": "[11(22)]", "file": "3d_1_1_22.json", "n": 3, "segre": "[11(22)]",
     "description": "Nonlocal operator, quadratic cone and double plane."},
    {"name": "[1(12)2]", "file": "3d_1_12_2.json", "n": 3, "segre": "[1(12)2]",
     "description": "Nonlocal operator, irreducible quartic."},
    {"name": "[11(13)]", "file": "3d_1_1_13.json", "n": 3, "segre": "[11(13)]",
     "description": "Nonlocal operator, irreducible quartic."},
    {"name": "[(11)13]", "file": "3d_11_13.json", "n": 3, "segre": "[(11)13]",
     "description": "Nonlocal operator, irreducible quartic."},
    {"name": "[111(12)]", "file": "3d_111_12.json", "n": 3, "segre": "[111(12)]",
     "description": "Nonlocal operator, local when lam^2 = mu^2."},
    {"name": "[(11)112]", "file": "3d_11_112.json", "n": 3, "segre": "[(11)112]",
     "description": "Nonlocal operator, local when beta^2 = mu^2."},
    {"name": "[1111(11)]", "file": "3d_1111_11.json", "n": 3, "segre": "[1111(11)]",
     "description": "Nonlocal operator, local when a2^2 = alpha^2 or a3^2 = alpha^2."},
    # Add more normal forms here together with their data file
]

NOTES = [
    {
        "segre": "[6]",
        "text": "Segre type [6] does not correspond to any Hamiltonian operator; no entry.",
    },
]


def find(name: str):
    return next((e for e in ENTRIES if e["name"] == name), None)
