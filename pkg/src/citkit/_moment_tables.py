"""Coefficient tables for exact permutation moments of tr(A_pi B).

Generated by :mod:`citkit._moment_derivation` (see that module for the
construction and for how to regenerate these literals).  Each table gives

    E[T^m] = sum over keys (monA, monB, b) of
             coeff * monA(A) * monB(B) / (n * (n-1) * ... * (n-b+1))

where T = tr(A_pi B) under a uniformly random permutation pi, A and B are
symmetric matrices with zero row sums, and the monomials are products of the
matrix invariants computed by ``citkit.permnull.dense_invariants``.

Do not edit by hand; rerun the derivation instead.
"""

T1 = {
    (('t',), ('t',), 1): 1,
    (('t',), ('t',), 2): 1,
}

T2 = {
    (('d',), ('d',), 1): 1,
    (('d',), ('d',), 2): 7,
    (('d',), ('q',), 2): -2,
    (('d',), ('t', 't'), 2): -1,
    (('q',), ('d',), 2): -2,
    (('q',), ('q',), 2): 2,
    (('t', 't'), ('d',), 2): -1,
    (('t', 't'), ('t', 't'), 2): 1,
    (('d',), ('d',), 3): 24,
    (('d',), ('q',), 3): -8,
    (('d',), ('t', 't'), 3): -4,
    (('q',), ('d',), 3): -8,
    (('q',), ('q',), 3): 4,
    (('t', 't'), ('d',), 3): -4,
    (('t', 't'), ('t', 't'), 3): 2,
    (('d',), ('d',), 4): 36,
    (('d',), ('q',), 4): -12,
    (('d',), ('t', 't'), 4): -6,
    (('q',), ('d',), 4): -12,
    (('q',), ('q',), 4): 4,
    (('q',), ('t', 't'), 4): 2,
    (('t', 't'), ('d',), 4): -6,
    (('t', 't'), ('q',), 4): 2,
    (('t', 't'), ('t', 't'), 4): 1,
}

T3 = {
    (('d3',), ('d3',), 1): 1,
    (('d', 't'), ('d', 't'), 2): 3,
    (('d', 't'), ('d3',), 2): -3,
    (('d3',), ('d', 't'), 2): -3,
    (('d3',), ('d3',), 2): 31,
    (('d3',), ('e3',), 2): -4,
    (('d3',), ('m111',), 2): -6,
    (('d3',), ('m21',), 2): -12,
    (('e3',), ('d3',), 2): -4,
    (('e3',), ('e3',), 2): 4,
    (('m111',), ('d3',), 2): -6,
    (('m111',), ('m111',), 2): 6,
    (('m21',), ('d3',), 2): -12,
    (('m21',), ('m21',), 2): 12,
    (('d', 't'), ('d', 't'), 3): 30,
    (('d', 't'), ('d3',), 3): -48,
    (('d', 't'), ('m111',), 3): 12,
    (('d', 't'), ('m21',), 3): 12,
    (('d', 't'), ('q', 't'), 3): -6,
    (('d', 't'), ('t', 't', 't'), 3): -3,
    (('d3',), ('d', 't'), 3): -48,
    (('d3',), ('d3',), 3): 360,
    (('d3',), ('e3',), 3): -48,
    (('d3',), ('m111',), 3): -72,
    (('d3',), ('m21',), 3): -192,
    (('d3',), ('q', 't'), 3): 12,
    (('d3',), ('t', 't', 't'), 3): 2,
    (('d3',), ('tr3',), 3): 16,
    (('e3',), ('d3',), 3): -48,
    (('e3',), ('e3',), 3): 24,
    (('e3',), ('m21',), 3): 24,
    (('m111',), ('d', 't'), 3): 12,
    (('m111',), ('d3',), 3): -72,
    (('m111',), ('m111',), 3): 36,
    (('m111',), ('m21',), 3): 24,
    (('m21',), ('d', 't'), 3): 12,
    (('m21',), ('d3',), 3): -192,
    (('m21',), ('e3',), 3): 24,
    (('m21',), ('m111',), 3): 24,
    (('m21',), ('m21',), 3): 156,
    (('m21',), ('q', 't'), 3): -12,
    (('m21',), ('tr3',), 3): -24,
    (('q', 't'), ('d', 't'), 3): -6,
    (('q', 't'), ('d3',), 3): 12,
    (('q', 't'), ('m21',), 3): -12,
    (('q', 't'), ('q', 't'), 3): 6,
    (('t', 't', 't'), ('d', 't'), 3): -3,
    (('t', 't', 't'), ('d3',), 3): 2,
    (('t', 't', 't'), ('t', 't', 't'), 3): 1,
    (('tr3',), ('d3',), 3): 16,
    (('tr3',), ('m21',), 3): -24,
    (('tr3',), ('tr3',), 3): 8,
    (('d', 't'), ('d', 't'), 4): 141,
    (('d', 't'), ('d3',), 4): -342,
    (('d', 't'), ('e3',), 4): 12,
    (('d', 't'), ('m111',), 4): 102,
    (('d', 't'), ('m21',), 4): 120,
    (('d', 't'), ('q', 't'), 4): -30,
    (('d', 't'), ('t', 't', 't'), 4): -15,
    (('d3',), ('d', 't'), 4): -342,
    (('d3',), ('d3',), 4): 2340,
    (('d3',), ('e3',), 4): -312,
    (('d3',), ('m111',), 4): -468,
    (('d3',), ('m21',), 4): -1368,
    (('d3',), ('q', 't'), 4): 108,
    (('d3',), ('t', 't', 't'), 4): 18,
    (('d3',), ('tr3',), 4): 144,
    (('e3',), ('d', 't'), 4): 12,
    (('e3',), ('d3',), 4): -312,
    (('e3',), ('e3',), 4): 80,
    (('e3',), ('m111',), 4): 24,
    (('e3',), ('m21',), 4): 216,
    (('e3',), ('q', 't'), 4): -12,
    (('e3',), ('tr3',), 4): -24,
    (('m111',), ('d', 't'), 4): 102,
    (('m111',), ('d3',), 4): -468,
    (('m111',), ('e3',), 4): 24,
    (('m111',), ('m111',), 4): 132,
    (('m111',), ('m21',), 4): 240,
    (('m111',), ('q', 't'), 4): -24,
    (('m111',), ('t', 't', 't'), 4): -6,
    (('m111',), ('tr3',), 4): -24,
    (('m21',), ('d', 't'), 4): 120,
    (('m21',), ('d3',), 4): -1368,
    (('m21',), ('e3',), 4): 216,
    (('m21',), ('m111',), 4): 240,
    (('m21',), ('m21',), 4): 924,
    (('m21',), ('q', 't'), 4): -60,
    (('m21',), ('tr3',), 4): -120,
    (('q', 't'), ('d', 't'), 4): -30,
    (('q', 't'), ('d3',), 4): 108,
    (('q', 't'), ('e3',), 4): -12,
    (('q', 't'), ('m111',), 4): -24,
    (('q', 't'), ('m21',), 4): -60,
    (('q', 't'), ('q', 't'), 4): 18,
    (('t', 't', 't'), ('d', 't'), 4): -15,
    (('t', 't', 't'), ('d3',), 4): 18,
    (('t', 't', 't'), ('m111',), 4): -6,
    (('t', 't', 't'), ('t', 't', 't'), 4): 3,
    (('tr3',), ('d3',), 4): 144,
    (('tr3',), ('e3',), 4): -24,
    (('tr3',), ('m111',), 4): -24,
    (('tr3',), ('m21',), 4): -120,
    (('tr3',), ('tr3',), 4): 24,
    (('d', 't'), ('d', 't'), 5): 348,
    (('d', 't'), ('d3',), 5): -1296,
    (('d', 't'), ('e3',), 5): 96,
    (('d', 't'), ('m111',), 5): 336,
    (('d', 't'), ('m21',), 5): 624,
    (('d', 't'), ('q', 't'), 5): -84,
    (('d', 't'), ('t', 't', 't'), 5): -30,
    (('d', 't'), ('tr3',), 5): -48,
    (('d3',), ('d', 't'), 5): -1296,
    (('d3',), ('d3',), 5): 8640,
    (('d3',), ('e3',), 5): -1152,
    (('d3',), ('m111',), 5): -1728,
    (('d3',), ('m21',), 5): -5184,
    (('d3',), ('q', 't'), 5): 432,
    (('d3',), ('t', 't', 't'), 5): 72,
    (('d3',), ('tr3',), 5): 576,
    (('e3',), ('d', 't'), 5): 96,
    (('e3',), ('d3',), 5): -1152,
    (('e3',), ('e3',), 5): 192,
    (('e3',), ('m111',), 5): 192,
    (('e3',), ('m21',), 5): 768,
    (('e3',), ('q', 't'), 5): -48,
    (('e3',), ('tr3',), 5): -96,
    (('m111',), ('d', 't'), 5): 336,
    (('m111',), ('d3',), 5): -1728,
    (('m111',), ('e3',), 5): 192,
    (('m111',), ('m111',), 5): 384,
    (('m111',), ('m21',), 5): 960,
    (('m111',), ('q', 't'), 5): -96,
    (('m111',), ('t', 't', 't'), 5): -24,
    (('m111',), ('tr3',), 5): -96,
    (('m21',), ('d', 't'), 5): 624,
    (('m21',), ('d3',), 5): -5184,
    (('m21',), ('e3',), 5): 768,
    (('m21',), ('m111',), 5): 960,
    (('m21',), ('m21',), 5): 3264,
    (('m21',), ('q', 't'), 5): -240,
    (('m21',), ('t', 't', 't'), 5): -24,
    (('m21',), ('tr3',), 5): -384,
    (('q', 't'), ('d', 't'), 5): -84,
    (('q', 't'), ('d3',), 5): 432,
    (('q', 't'), ('e3',), 5): -48,
    (('q', 't'), ('m111',), 5): -96,
    (('q', 't'), ('m21',), 5): -240,
    (('q', 't'), ('q', 't'), 5): 24,
    (('q', 't'), ('t', 't', 't'), 5): 6,
    (('q', 't'), ('tr3',), 5): 24,
    (('t', 't', 't'), ('d', 't'), 5): -30,
    (('t', 't', 't'), ('d3',), 5): 72,
    (('t', 't', 't'), ('m111',), 5): -24,
    (('t', 't', 't'), ('m21',), 5): -24,
    (('t', 't', 't'), ('q', 't'), 5): 6,
    (('t', 't', 't'), ('t', 't', 't'), 5): 3,
    (('tr3',), ('d', 't'), 5): -48,
    (('tr3',), ('d3',), 5): 576,
    (('tr3',), ('e3',), 5): -96,
    (('tr3',), ('m111',), 5): -96,
    (('tr3',), ('m21',), 5): -384,
    (('tr3',), ('q', 't'), 5): 24,
    (('tr3',), ('tr3',), 5): 48,
    (('d', 't'), ('d', 't'), 6): 324,
    (('d', 't'), ('d3',), 6): -2160,
    (('d', 't'), ('e3',), 6): 288,
    (('d', 't'), ('m111',), 6): 432,
    (('d', 't'), ('m21',), 6): 1296,
    (('d', 't'), ('q', 't'), 6): -108,
    (('d', 't'), ('t', 't', 't'), 6): -18,
    (('d', 't'), ('tr3',), 6): -144,
    (('d3',), ('d', 't'), 6): -2160,
    (('d3',), ('d3',), 6): 14400,
    (('d3',), ('e3',), 6): -1920,
    (('d3',), ('m111',), 6): -2880,
    (('d3',), ('m21',), 6): -8640,
    (('d3',), ('q', 't'), 6): 720,
    (('d3',), ('t', 't', 't'), 6): 120,
    (('d3',), ('tr3',), 6): 960,
    (('e3',), ('d', 't'), 6): 288,
    (('e3',), ('d3',), 6): -1920,
    (('e3',), ('e3',), 6): 256,
    (('e3',), ('m111',), 6): 384,
    (('e3',), ('m21',), 6): 1152,
    (('e3',), ('q', 't'), 6): -96,
    (('e3',), ('t', 't', 't'), 6): -16,
    (('e3',), ('tr3',), 6): -128,
    (('m111',), ('d', 't'), 6): 432,
    (('m111',), ('d3',), 6): -2880,
    (('m111',), ('e3',), 6): 384,
    (('m111',), ('m111',), 6): 576,
    (('m111',), ('m21',), 6): 1728,
    (('m111',), ('q', 't'), 6): -144,
    (('m111',), ('t', 't', 't'), 6): -24,
    (('m111',), ('tr3',), 6): -192,
    (('m21',), ('d', 't'), 6): 1296,
    (('m21',), ('d3',), 6): -8640,
    (('m21',), ('e3',), 6): 1152,
    (('m21',), ('m111',), 6): 1728,
    (('m21',), ('m21',), 6): 5184,
    (('m21',), ('q', 't'), 6): -432,
    (('m21',), ('t', 't', 't'), 6): -72,
    (('m21',), ('tr3',), 6): -576,
    (('q', 't'), ('d', 't'), 6): -108,
    (('q', 't'), ('d3',), 6): 720,
    (('q', 't'), ('e3',), 6): -96,
    (('q', 't'), ('m111',), 6): -144,
    (('q', 't'), ('m21',), 6): -432,
    (('q', 't'), ('q', 't'), 6): 36,
    (('q', 't'), ('t', 't', 't'), 6): 6,
    (('q', 't'), ('tr3',), 6): 48,
    (('t', 't', 't'), ('d', 't'), 6): -18,
    (('t', 't', 't'), ('d3',), 6): 120,
    (('t', 't', 't'), ('e3',), 6): -16,
    (('t', 't', 't'), ('m111',), 6): -24,
    (('t', 't', 't'), ('m21',), 6): -72,
    (('t', 't', 't'), ('q', 't'), 6): 6,
    (('t', 't', 't'), ('t', 't', 't'), 6): 1,
    (('t', 't', 't'), ('tr3',), 6): 8,
    (('tr3',), ('d', 't'), 6): -144,
    (('tr3',), ('d3',), 6): 960,
    (('tr3',), ('e3',), 6): -128,
    (('tr3',), ('m111',), 6): -192,
    (('tr3',), ('m21',), 6): -576,
    (('tr3',), ('q', 't'), 6): 48,
    (('tr3',), ('t', 't', 't'), 6): 8,
    (('tr3',), ('tr3',), 6): 64,
}

T4 = {
    (('d4',), ('d4',), 1): 1,
    (('d', 'd'), ('d', 'd'), 2): 3,
    (('d', 'd'), ('d4',), 2): -3,
    (('d3', 't'), ('d3', 't'), 2): 4,
    (('d3', 't'), ('d4',), 2): -4,
    (('d4',), ('d', 'd'), 2): -3,
    (('d4',), ('d3', 't'), 2): -4,
    (('d4',), ('d4',), 2): 127,
    (('d4',), ('e4',), 2): -8,
    (('d4',), ('l2d',), 2): -24,
    (('d4',), ('l2le',), 2): -24,
    (('d4',), ('le3',), 2): -32,
    (('d4',), ('llq',), 2): -24,
    (('e4',), ('d4',), 2): -8,
    (('e4',), ('e4',), 2): 8,
    (('l2d',), ('d4',), 2): -24,
    (('l2d',), ('l2d',), 2): 24,
    (('l2le',), ('d4',), 2): -24,
    (('l2le',), ('l2le',), 2): 24,
    (('le3',), ('d4',), 2): -32,
    (('le3',), ('le3',), 2): 32,
    (('llq',), ('d4',), 2): -24,
    (('llq',), ('llq',), 2): 24,
    (('bow',), ('bow',), 3): 48,
    (('bow',), ('d4',), 3): 96,
    (('bow',), ('e4',), 3): -48,
    (('bow',), ('l2d',), 3): -96,
    (('d', 'd'), ('d', 'd'), 3): 42,
    (('d', 'd'), ('d', 'q'), 3): -12,
    (('d', 'd'), ('d', 't', 't'), 3): -6,
    (('d', 'd'), ('d3', 't'), 3): 12,
    (('d', 'd'), ('d4',), 3): -84,
    (('d', 'd'), ('l2d',), 3): 24,
    (('d', 'd'), ('l2le',), 3): 24,
    (('d', 'q'), ('d', 'd'), 3): -12,
    (('d', 'q'), ('d', 'q'), 3): 12,
    (('d', 'q'), ('d4',), 3): 24,
    (('d', 'q'), ('l2d',), 3): -24,
    (('d', 't', 't'), ('d', 'd'), 3): -6,
    (('d', 't', 't'), ('d', 't', 't'), 3): 6,
    (('d', 't', 't'), ('d3', 't'), 3): -12,
    (('d', 't', 't'), ('d4',), 3): 12,
    (('d3', 't'), ('d', 'd'), 3): 12,
    (('d3', 't'), ('d', 't', 't'), 3): -12,
    (('d3', 't'), ('d3', 't'), 3): 140,
    (('d3', 't'), ('d4',), 3): -256,
    (('d3', 't'), ('e3', 't'), 3): -16,
    (('d3', 't'), ('l2d',), 3): 48,
    (('d3', 't'), ('l2le',), 3): 72,
    (('d3', 't'), ('le3',), 3): 32,
    (('d3', 't'), ('llq',), 3): 48,
    (('d3', 't'), ('m111', 't'), 3): -24,
    (('d3', 't'), ('m21', 't'), 3): -48,
    (('d4',), ('bow',), 3): 96,
    (('d4',), ('d', 'd'), 3): -84,
    (('d4',), ('d', 'q'), 3): 24,
    (('d4',), ('d', 't', 't'), 3): 12,
    (('d4',), ('d3', 't'), 3): -256,
    (('d4',), ('d4',), 3): 3864,
    (('d4',), ('e3', 't'), 3): 32,
    (('d4',), ('e4',), 3): -224,
    (('d4',), ('l2d',), 3): -1536,
    (('d4',), ('l2le',), 3): -864,
    (('d4',), ('lds',), 3): 192,
    (('d4',), ('le3',), 3): -1152,
    (('d4',), ('llq',), 3): -672,
    (('d4',), ('ltr3',), 3): 192,
    (('d4',), ('m111', 't'), 3): 48,
    (('d4',), ('m21', 't'), 3): 96,
    (('d4',), ('pll',), 3): 96,
    (('d4',), ('th4',), 3): 192,
    (('e3', 't'), ('d3', 't'), 3): -16,
    (('e3', 't'), ('d4',), 3): 32,
    (('e3', 't'), ('e3', 't'), 3): 16,
    (('e3', 't'), ('le3',), 3): -32,
    (('e4',), ('bow',), 3): -48,
    (('e4',), ('d4',), 3): -224,
    (('e4',), ('e4',), 3): 112,
    (('e4',), ('l2d',), 3): 96,
    (('e4',), ('le3',), 3): 64,
    (('l2d',), ('bow',), 3): -96,
    (('l2d',), ('d', 'd'), 3): 24,
    (('l2d',), ('d', 'q'), 3): -24,
    (('l2d',), ('d3', 't'), 3): 48,
    (('l2d',), ('d4',), 3): -1536,
    (('l2d',), ('e4',), 3): 96,
    (('l2d',), ('l2d',), 3): 1080,
    (('l2d',), ('l2le',), 3): 240,
    (('l2d',), ('lds',), 3): -96,
    (('l2d',), ('le3',), 3): 384,
    (('l2d',), ('llq',), 3): 240,
    (('l2d',), ('ltr3',), 3): -192,
    (('l2d',), ('m21', 't'), 3): -48,
    (('l2d',), ('pll',), 3): -48,
    (('l2d',), ('th4',), 3): -96,
    (('l2le',), ('d', 'd'), 3): 24,
    (('l2le',), ('d3', 't'), 3): 72,
    (('l2le',), ('d4',), 3): -864,
    (('l2le',), ('l2d',), 3): 240,
    (('l2le',), ('l2le',), 3): 576,
    (('l2le',), ('lds',), 3): -96,
    (('l2le',), ('le3',), 3): 96,
    (('l2le',), ('llq',), 3): 96,
    (('l2le',), ('m111', 't'), 3): -48,
    (('l2le',), ('pll',), 3): -96,
    (('lds',), ('d4',), 3): 192,
    (('lds',), ('l2d',), 3): -96,
    (('lds',), ('l2le',), 3): -96,
    (('lds',), ('lds',), 3): 96,
    (('lds',), ('le3',), 3): -96,
    (('le3',), ('d3', 't'), 3): 32,
    (('le3',), ('d4',), 3): -1152,
    (('le3',), ('e3', 't'), 3): -32,
    (('le3',), ('e4',), 3): 64,
    (('le3',), ('l2d',), 3): 384,
    (('le3',), ('l2le',), 3): 96,
    (('le3',), ('lds',), 3): -96,
    (('le3',), ('le3',), 3): 800,
    (('le3',), ('llq',), 3): 96,
    (('le3',), ('th4',), 3): -192,
    (('llq',), ('d3', 't'), 3): 48,
    (('llq',), ('d4',), 3): -672,
    (('llq',), ('l2d',), 3): 240,
    (('llq',), ('l2le',), 3): 96,
    (('llq',), ('le3',), 3): 96,
    (('llq',), ('llq',), 3): 336,
    (('llq',), ('ltr3',), 3): -96,
    (('llq',), ('m21', 't'), 3): -48,
    (('ltr3',), ('d4',), 3): 192,
    (('ltr3',), ('l2d',), 3): -192,
    (('ltr3',), ('llq',), 3): -96,
    (('ltr3',), ('ltr3',), 3): 96,
    (('m111', 't'), ('d3', 't'), 3): -24,
    (('m111', 't'), ('d4',), 3): 48,
    (('m111', 't'), ('l2le',), 3): -48,
    (('m111', 't'), ('m111', 't'), 3): 24,
    (('m21', 't'), ('d3', 't'), 3): -48,
    (('m21', 't'), ('d4',), 3): 96,
    (('m21', 't'), ('l2d',), 3): -48,
    (('m21', 't'), ('llq',), 3): -48,
    (('m21', 't'), ('m21', 't'), 3): 48,
    (('pll',), ('d4',), 3): 96,
    (('pll',), ('l2d',), 3): -48,
    (('pll',), ('l2le',), 3): -96,
    (('pll',), ('pll',), 3): 48,
    (('th4',), ('d4',), 3): 192,
    (('th4',), ('l2d',), 3): -96,
    (('th4',), ('le3',), 3): -192,
    (('th4',), ('th4',), 3): 96,
    (('bow',), ('bow',), 4): 672,
    (('bow',), ('d', 'd'), 4): -48,
    (('bow',), ('d', 'q'), 4): 96,
    (('bow',), ('d4',), 4): 2592,
    (('bow',), ('e4',), 4): -576,
    (('bow',), ('l2d',), 4): -2208,
    (('bow',), ('l2le',), 4): -192,
    (('bow',), ('lds',), 4): 192,
    (('bow',), ('le3',), 4): -768,
    (('bow',), ('llq',), 4): -192,
    (('bow',), ('ltr3',), 4): 384,
    (('bow',), ('q', 'q'), 4): -48,
    (('bow',), ('th4',), 4): 192,
    (('bow',), ('tr4',), 4): -96,
    (('d', 'd'), ('bow',), 4): -48,
    (('d', 'd'), ('d', 'd'), 4): 297,
    (('d', 'd'), ('d', 'q'), 4): -132,
    (('d', 'd'), ('d', 't', 't'), 4): -78,
    (('d', 'd'), ('d3', 't'), 4): 240,
    (('d', 'd'), ('d4',), 4): -1314,
    (('d', 'd'), ('e4',), 4): 24,
    (('d', 'd'), ('l2d',), 4): 528,
    (('d', 'd'), ('l2le',), 4): 528,
    (('d', 'd'), ('lds',), 4): -96,
    (('d', 'd'), ('le3',), 4): 96,
    (('d', 'd'), ('llq',), 4): 72,
    (('d', 'd'), ('m111', 't'), 4): -48,
    (('d', 'd'), ('m21', 't'), 4): -48,
    (('d', 'd'), ('pll',), 4): -48,
    (('d', 'd'), ('q', 'q'), 4): 12,
    (('d', 'd'), ('q', 't', 't'), 4): 12,
    (('d', 'd'), ('t', 't', 't', 't'), 4): 3,
    (('d', 'q'), ('bow',), 4): 96,
    (('d', 'q'), ('d', 'd'), 4): -132,
    (('d', 'q'), ('d', 'q'), 4): 132,
    (('d', 'q'), ('d', 't', 't'), 4): 12,
    (('d', 'q'), ('d3', 't'), 4): -48,
    (('d', 'q'), ('d4',), 4): 648,
    (('d', 'q'), ('e4',), 4): -48,
    (('d', 'q'), ('l2d',), 4): -504,
    (('d', 'q'), ('l2le',), 4): -144,
    (('d', 'q'), ('lds',), 4): 96,
    (('d', 'q'), ('le3',), 4): -96,
    (('d', 'q'), ('llq',), 4): -24,
    (('d', 'q'), ('m21', 't'), 4): 48,
    (('d', 'q'), ('q', 'q'), 4): -24,
    (('d', 'q'), ('q', 't', 't'), 4): -12,
    (('d', 't', 't'), ('d', 'd'), 4): -78,
    (('d', 't', 't'), ('d', 'q'), 4): 12,
    (('d', 't', 't'), ('d', 't', 't'), 4): 84,
    (('d', 't', 't'), ('d3', 't'), 4): -228,
    (('d', 't', 't'), ('d4',), 4): 324,
    (('d', 't', 't'), ('l2d',), 4): -48,
    (('d', 't', 't'), ('l2le',), 4): -120,
    (('d', 't', 't'), ('llq',), 4): -24,
    (('d', 't', 't'), ('m111', 't'), 4): 48,
    (('d', 't', 't'), ('m21', 't'), 4): 48,
    (('d', 't', 't'), ('q', 't', 't'), 4): -12,
    (('d', 't', 't'), ('t', 't', 't', 't'), 4): -6,
    (('d3', 't'), ('d', 'd'), 4): 240,
    (('d3', 't'), ('d', 'q'), 4): -48,
    (('d3', 't'), ('d', 't', 't'), 4): -228,
    (('d3', 't'), ('d3', 't'), 4): 1948,
    (('d3', 't'), ('d4',), 4): -5064,
    (('d3', 't'), ('e3', 't'), 4): -208,
    (('d3', 't'), ('e4',), 4): 32,
    (('d3', 't'), ('l2d',), 4): 1584,
    (('d3', 't'), ('l2le',), 4): 1752,
    (('d3', 't'), ('lds',), 4): -192,
    (('d3', 't'), ('le3',), 4): 736,
    (('d3', 't'), ('llq',), 4): 1008,
    (('d3', 't'), ('ltr3',), 4): -192,
    (('d3', 't'), ('m111', 't'), 4): -408,
    (('d3', 't'), ('m21', 't'), 4): -912,
    (('d3', 't'), ('pll',), 4): -192,
    (('d3', 't'), ('q', 't', 't'), 4): 48,
    (('d3', 't'), ('t', 't', 't', 't'), 4): 8,
    (('d3', 't'), ('t', 'tr3'), 4): 64,
    (('d4',), ('bow',), 4): 2592,
    (('d4',), ('d', 'd'), 4): -1314,
    (('d4',), ('d', 'q'), 4): 648,
    (('d4',), ('d', 't', 't'), 4): 324,
    (('d4',), ('d3', 't'), 4): -5064,
    (('d4',), ('d4',), 4): 61236,
    (('d4',), ('e3', 't'), 4): 672,
    (('d4',), ('e4',), 4): -3504,
    (('d4',), ('l2d',), 4): -30384,
    (('d4',), ('l2le',), 4): -13968,
    (('d4',), ('lds',), 4): 4032,
    (('d4',), ('le3',), 4): -18624,
    (('d4',), ('llq',), 4): -10512,
    (('d4',), ('ltr3',), 4): 5184,
    (('d4',), ('m111', 't'), 4): 1008,
    (('d4',), ('m21', 't'), 4): 2592,
    (('d4',), ('pll',), 4): 2016,
    (('d4',), ('q', 'q'), 4): -72,
    (('d4',), ('q', 't', 't'), 4): -72,
    (('d4',), ('t', 't', 't', 't'), 4): -6,
    (('d4',), ('t', 'tr3'), 4): -192,
    (('d4',), ('th4',), 4): 4032,
    (('d4',), ('tr4',), 4): -288,
    (('e3', 't'), ('d3', 't'), 4): -208,
    (('e3', 't'), ('d4',), 4): 672,
    (('e3', 't'), ('e3', 't'), 4): 112,
    (('e3', 't'), ('e4',), 4): -32,
    (('e3', 't'), ('l2d',), 4): -192,
    (('e3', 't'), ('l2le',), 4): -96,
    (('e3', 't'), ('lds',), 4): 96,
    (('e3', 't'), ('le3',), 4): -352,
    (('e3', 't'), ('llq',), 4): -96,
    (('e3', 't'), ('m21', 't'), 4): 96,
    (('e4',), ('bow',), 4): -576,
    (('e4',), ('d', 'd'), 4): 24,
    (('e4',), ('d', 'q'), 4): -48,
    (('e4',), ('d3', 't'), 4): 32,
    (('e4',), ('d4',), 4): -3504,
    (('e4',), ('e3', 't'), 4): -32,
    (('e4',), ('e4',), 4): 832,
    (('e4',), ('l2d',), 4): 2016,
    (('e4',), ('l2le',), 4): 192,
    (('e4',), ('lds',), 4): -192,
    (('e4',), ('le3',), 4): 1472,
    (('e4',), ('llq',), 4): 192,
    (('e4',), ('ltr3',), 4): -192,
    (('e4',), ('q', 'q'), 4): 24,
    (('e4',), ('th4',), 4): -288,
    (('e4',), ('tr4',), 4): 48,
    (('l2d',), ('bow',), 4): -2208,
    (('l2d',), ('d', 'd'), 4): 528,
    (('l2d',), ('d', 'q'), 4): -504,
    (('l2d',), ('d', 't', 't'), 4): -48,
    (('l2d',), ('d3', 't'), 4): 1584,
    (('l2d',), ('d4',), 4): -30384,
    (('l2d',), ('e3', 't'), 4): -192,
    (('l2d',), ('e4',), 4): 2016,
    (('l2d',), ('l2d',), 4): 19608,
    (('l2d',), ('l2le',), 4): 5712,
    (('l2d',), ('lds',), 4): -2208,
    (('l2d',), ('le3',), 4): 9216,
    (('l2d',), ('llq',), 4): 5136,
    (('l2d',), ('ltr3',), 4): -4224,
    (('l2d',), ('m111', 't'), 4): -192,
    (('l2d',), ('m21', 't'), 4): -1296,
    (('l2d',), ('pll',), 4): -1008,
    (('l2d',), ('q', 'q'), 4): 96,
    (('l2d',), ('q', 't', 't'), 4): 48,
    (('l2d',), ('t', 'tr3'), 4): 192,
    (('l2d',), ('th4',), 4): -2400,
    (('l2d',), ('tr4',), 4): 384,
    (('l2le',), ('bow',), 4): -192,
    (('l2le',), ('d', 'd'), 4): 528,
    (('l2le',), ('d', 'q'), 4): -144,
    (('l2le',), ('d', 't', 't'), 4): -120,
    (('l2le',), ('d3', 't'), 4): 1752,
    (('l2le',), ('d4',), 4): -13968,
    (('l2le',), ('e3', 't'), 4): -96,
    (('l2le',), ('e4',), 4): 192,
    (('l2le',), ('l2d',), 4): 5712,
    (('l2le',), ('l2le',), 4): 6288,
    (('l2le',), ('lds',), 4): -1248,
    (('l2le',), ('le3',), 4): 2208,
    (('l2le',), ('llq',), 4): 2400,
    (('l2le',), ('ltr3',), 4): -768,
    (('l2le',), ('m111', 't'), 4): -672,
    (('l2le',), ('m21', 't'), 4): -576,
    (('l2le',), ('pll',), 4): -1152,
    (('l2le',), ('th4',), 4): -192,
    (('lds',), ('bow',), 4): 192,
    (('lds',), ('d', 'd'), 4): -96,
    (('lds',), ('d', 'q'), 4): 96,
    (('lds',), ('d3', 't'), 4): -192,
    (('lds',), ('d4',), 4): 4032,
    (('lds',), ('e3', 't'), 4): 96,
    (('lds',), ('e4',), 4): -192,
    (('lds',), ('l2d',), 4): -2208,
    (('lds',), ('l2le',), 4): -1248,
    (('lds',), ('lds',), 4): 768,
    (('lds',), ('le3',), 4): -1440,
    (('lds',), ('llq',), 4): -480,
    (('lds',), ('ltr3',), 4): 192,
    (('lds',), ('m21', 't'), 4): 96,
    (('lds',), ('pll',), 4): 192,
    (('lds',), ('th4',), 4): 192,
    (('le3',), ('bow',), 4): -768,
    (('le3',), ('d', 'd'), 4): 96,
    (('le3',), ('d', 'q'), 4): -96,
    (('le3',), ('d3', 't'), 4): 736,
    (('le3',), ('d4',), 4): -18624,
    (('le3',), ('e3', 't'), 4): -352,
    (('le3',), ('e4',), 4): 1472,
    (('le3',), ('l2d',), 4): 9216,
    (('le3',), ('l2le',), 4): 2208,
    (('le3',), ('lds',), 4): -1440,
    (('le3',), ('le3',), 4): 9120,
    (('le3',), ('llq',), 4): 2592,
    (('le3',), ('ltr3',), 4): -1152,
    (('le3',), ('m21', 't'), 4): -384,
    (('le3',), ('pll',), 4): -192,
    (('le3',), ('th4',), 4): -2496,
    (('llq',), ('bow',), 4): -192,
    (('llq',), ('d', 'd'), 4): 72,
    (('llq',), ('d', 'q'), 4): -24,
    (('llq',), ('d', 't', 't'), 4): -24,
    (('llq',), ('d3', 't'), 4): 1008,
    (('llq',), ('d4',), 4): -10512,
    (('llq',), ('e3', 't'), 4): -96,
    (('llq',), ('e4',), 4): 192,
    (('llq',), ('l2d',), 4): 5136,
    (('llq',), ('l2le',), 4): 2400,
    (('llq',), ('lds',), 4): -480,
    (('llq',), ('le3',), 4): 2592,
    (('llq',), ('llq',), 4): 2880,
    (('llq',), ('ltr3',), 4): -1440,
    (('llq',), ('m111', 't'), 4): -144,
    (('llq',), ('m21', 't'), 4): -768,
    (('llq',), ('pll',), 4): -336,
    (('llq',), ('q', 't', 't'), 4): 24,
    (('llq',), ('t', 'tr3'), 4): 96,
    (('llq',), ('th4',), 4): -480,
    (('llq',), ('tr4',), 4): 96,
    (('ltr3',), ('bow',), 4): 384,
    (('ltr3',), ('d3', 't'), 4): -192,
    (('ltr3',), ('d4',), 4): 5184,
    (('ltr3',), ('e4',), 4): -192,
    (('ltr3',), ('l2d',), 4): -4224,
    (('ltr3',), ('l2le',), 4): -768,
    (('ltr3',), ('lds',), 4): 192,
    (('ltr3',), ('le3',), 4): -1152,
    (('ltr3',), ('llq',), 4): -1440,
    (('ltr3',), ('ltr3',), 4): 1632,
    (('ltr3',), ('m21', 't'), 4): 288,
    (('ltr3',), ('pll',), 4): 192,
    (('ltr3',), ('t', 'tr3'), 4): -96,
    (('ltr3',), ('th4',), 4): 384,
    (('ltr3',), ('tr4',), 4): -192,
    (('m111', 't'), ('d', 'd'), 4): -48,
    (('m111', 't'), ('d', 't', 't'), 4): 48,
    (('m111', 't'), ('d3', 't'), 4): -408,
    (('m111', 't'), ('d4',), 4): 1008,
    (('m111', 't'), ('l2d',), 4): -192,
    (('m111', 't'), ('l2le',), 4): -672,
    (('m111', 't'), ('llq',), 4): -144,
    (('m111', 't'), ('m111', 't'), 4): 216,
    (('m111', 't'), ('m21', 't'), 4): 96,
    (('m111', 't'), ('pll',), 4): 96,
    (('m21', 't'), ('d', 'd'), 4): -48,
    (('m21', 't'), ('d', 'q'), 4): 48,
    (('m21', 't'), ('d', 't', 't'), 4): 48,
    (('m21', 't'), ('d3', 't'), 4): -912,
    (('m21', 't'), ('d4',), 4): 2592,
    (('m21', 't'), ('e3', 't'), 4): 96,
    (('m21', 't'), ('l2d',), 4): -1296,
    (('m21', 't'), ('l2le',), 4): -576,
    (('m21', 't'), ('lds',), 4): 96,
    (('m21', 't'), ('le3',), 4): -384,
    (('m21', 't'), ('llq',), 4): -768,
    (('m21', 't'), ('ltr3',), 4): 288,
    (('m21', 't'), ('m111', 't'), 4): 96,
    (('m21', 't'), ('m21', 't'), 4): 768,
    (('m21', 't'), ('pll',), 4): 96,
    (('m21', 't'), ('q', 't', 't'), 4): -48,
    (('m21', 't'), ('t', 'tr3'), 4): -96,
    (('pll',), ('d', 'd'), 4): -48,
    (('pll',), ('d3', 't'), 4): -192,
    (('pll',), ('d4',), 4): 2016,
    (('pll',), ('l2d',), 4): -1008,
    (('pll',), ('l2le',), 4): -1152,
    (('pll',), ('lds',), 4): 192,
    (('pll',), ('le3',), 4): -192,
    (('pll',), ('llq',), 4): -336,
    (('pll',), ('ltr3',), 4): 192,
    (('pll',), ('m111', 't'), 4): 96,
    (('pll',), ('m21', 't'), 4): 96,
    (('pll',), ('pll',), 4): 336,
    (('q', 'q'), ('bow',), 4): -48,
    (('q', 'q'), ('d', 'd'), 4): 12,
    (('q', 'q'), ('d', 'q'), 4): -24,
    (('q', 'q'), ('d4',), 4): -72,
    (('q', 'q'), ('e4',), 4): 24,
    (('q', 'q'), ('l2d',), 4): 96,
    (('q', 'q'), ('q', 'q'), 4): 12,
    (('q', 't', 't'), ('d', 'd'), 4): 12,
    (('q', 't', 't'), ('d', 'q'), 4): -12,
    (('q', 't', 't'), ('d', 't', 't'), 4): -12,
    (('q', 't', 't'), ('d3', 't'), 4): 48,
    (('q', 't', 't'), ('d4',), 4): -72,
    (('q', 't', 't'), ('l2d',), 4): 48,
    (('q', 't', 't'), ('llq',), 4): 24,
    (('q', 't', 't'), ('m21', 't'), 4): -48,
    (('q', 't', 't'), ('q', 't', 't'), 4): 12,
    (('t', 't', 't', 't'), ('d', 'd'), 4): 3,
    (('t', 't', 't', 't'), ('d', 't', 't'), 4): -6,
    (('t', 't', 't', 't'), ('d3', 't'), 4): 8,
    (('t', 't', 't', 't'), ('d4',), 4): -6,
    (('t', 't', 't', 't'), ('t', 't', 't', 't'), 4): 1,
    (('t', 'tr3'), ('d3', 't'), 4): 64,
    (('t', 'tr3'), ('d4',), 4): -192,
    (('t', 'tr3'), ('l2d',), 4): 192,
    (('t', 'tr3'), ('llq',), 4): 96,
    (('t', 'tr3'), ('ltr3',), 4): -96,
    (('t', 'tr3'), ('m21', 't'), 4): -96,
    (('t', 'tr3'), ('t', 'tr3'), 4): 32,
    (('th4',), ('bow',), 4): 192,
    (('th4',), ('d4',), 4): 4032,
    (('th4',), ('e4',), 4): -288,
    (('th4',), ('l2d',), 4): -2400,
    (('th4',), ('l2le',), 4): -192,
    (('th4',), ('lds',), 4): 192,
    (('th4',), ('le3',), 4): -2496,
    (('th4',), ('llq',), 4): -480,
    (('th4',), ('ltr3',), 4): 384,
    (('th4',), ('th4',), 4): 1056,
    (('tr4',), ('bow',), 4): -96,
    (('tr4',), ('d4',), 4): -288,
    (('tr4',), ('e4',), 4): 48,
    (('tr4',), ('l2d',), 4): 384,
    (('tr4',), ('llq',), 4): 96,
    (('tr4',), ('ltr3',), 4): -192,
    (('tr4',), ('tr4',), 4): 48,
    (('bow',), ('bow',), 5): 4176,
    (('bow',), ('d', 'd'), 5): -576,
    (('bow',), ('d', 'q'), 5): 864,
    (('bow',), ('d3', 't'), 5): -384,
    (('bow',), ('d4',), 5): 31104,
    (('bow',), ('e3', 't'), 5): 192,
    (('bow',), ('e4',), 5): -3744,
    (('bow',), ('l2d',), 5): -22080,
    (('bow',), ('l2le',), 5): -4224,
    (('bow',), ('lds',), 5): 2880,
    (('bow',), ('le3',), 5): -11904,
    (('bow',), ('llq',), 5): -3456,
    (('bow',), ('ltr3',), 5): 3840,
    (('bow',), ('m21', 't'), 5): 192,
    (('bow',), ('pll',), 5): 576,
    (('bow',), ('q', 'q'), 5): -288,
    (('bow',), ('th4',), 5): 3456,
    (('bow',), ('tr4',), 5): -576,
    (('d', 'd'), ('bow',), 5): -576,
    (('d', 'd'), ('d', 'd'), 5): 1320,
    (('d', 'd'), ('d', 'q'), 5): -696,
    (('d', 'd'), ('d', 't', 't'), 5): -492,
    (('d', 'd'), ('d3', 't'), 5): 2352,
    (('d', 'd'), ('d4',), 5): -12960,
    (('d', 'd'), ('e3', 't'), 5): -96,
    (('d', 'd'), ('e4',), 5): 384,
    (('d', 'd'), ('l2d',), 5): 5856,
    (('d', 'd'), ('l2le',), 5): 4992,
    (('d', 'd'), ('lds',), 5): -1152,
    (('d', 'd'), ('le3',), 5): 1920,
    (('d', 'd'), ('llq',), 5): 1536,
    (('d', 'd'), ('ltr3',), 5): -384,
    (('d', 'd'), ('m111', 't'), 5): -624,
    (('d', 'd'), ('m21', 't'), 5): -768,
    (('d', 'd'), ('pll',), 5): -672,
    (('d', 'd'), ('q', 'q'), 5): 96,
    (('d', 'd'), ('q', 't', 't'), 5): 96,
    (('d', 'd'), ('t', 't', 't', 't'), 5): 24,
    (('d', 'd'), ('th4',), 5): -192,
    (('d', 'q'), ('bow',), 5): 864,
    (('d', 'q'), ('d', 'd'), 5): -696,
    (('d', 'q'), ('d', 'q'), 5): 672,
    (('d', 'q'), ('d', 't', 't'), 5): 108,
    (('d', 'q'), ('d3', 't'), 5): -720,
    (('d', 'q'), ('d4',), 5): 7776,
    (('d', 'q'), ('e3', 't'), 5): 96,
    (('d', 'q'), ('e4',), 5): -576,
    (('d', 'q'), ('l2d',), 5): -4896,
    (('d', 'q'), ('l2le',), 5): -2112,
    (('d', 'q'), ('lds',), 5): 1056,
    (('d', 'q'), ('le3',), 5): -1920,
    (('d', 'q'), ('llq',), 5): -672,
    (('d', 'q'), ('ltr3',), 5): 192,
    (('d', 'q'), ('m111', 't'), 5): 96,
    (('d', 'q'), ('m21', 't'), 5): 432,
    (('d', 'q'), ('pll',), 5): 240,
    (('d', 'q'), ('q', 'q'), 5): -144,
    (('d', 'q'), ('q', 't', 't'), 5): -72,
    (('d', 'q'), ('th4',), 5): 288,
    (('d', 't', 't'), ('d', 'd'), 5): -492,
    (('d', 't', 't'), ('d', 'q'), 5): 108,
    (('d', 't', 't'), ('d', 't', 't'), 5): 498,
    (('d', 't', 't'), ('d3', 't'), 5): -1896,
    (('d', 't', 't'), ('d4',), 5): 3888,
    (('d', 't', 't'), ('e3', 't'), 5): 48,
    (('d', 't', 't'), ('l2d',), 5): -912,
    (('d', 't', 't'), ('l2le',), 5): -1824,
    (('d', 't', 't'), ('lds',), 5): 96,
    (('d', 't', 't'), ('le3',), 5): -192,
    (('d', 't', 't'), ('llq',), 5): -480,
    (('d', 't', 't'), ('m111', 't'), 5): 552,
    (('d', 't', 't'), ('m21', 't'), 5): 528,
    (('d', 't', 't'), ('pll',), 5): 192,
    (('d', 't', 't'), ('q', 't', 't'), 5): -72,
    (('d', 't', 't'), ('t', 't', 't', 't'), 5): -36,
    (('d3', 't'), ('bow',), 5): -384,
    (('d3', 't'), ('d', 'd'), 5): 2352,
    (('d3', 't'), ('d', 'q'), 5): -720,
    (('d3', 't'), ('d', 't', 't'), 5): -1896,
    (('d3', 't'), ('d3', 't'), 5): 15456,
    (('d3', 't'), ('d4',), 5): -54720,
    (('d3', 't'), ('e3', 't'), 5): -1536,
    (('d3', 't'), ('e4',), 5): 768,
    (('d3', 't'), ('l2d',), 5): 21504,
    (('d3', 't'), ('l2le',), 5): 19200,
    (('d3', 't'), ('lds',), 5): -3264,
    (('d3', 't'), ('le3',), 5): 9600,
    (('d3', 't'), ('llq',), 5): 10560,
    (('d3', 't'), ('ltr3',), 5): -3264,
    (('d3', 't'), ('m111', 't'), 5): -3552,
    (('d3', 't'), ('m21', 't'), 5): -7776,
    (('d3', 't'), ('pll',), 5): -2880,
    (('d3', 't'), ('q', 't', 't'), 5): 480,
    (('d3', 't'), ('t', 't', 't', 't'), 5): 80,
    (('d3', 't'), ('t', 'tr3'), 5): 640,
    (('d3', 't'), ('th4',), 5): -768,
    (('d4',), ('bow',), 5): 31104,
    (('d4',), ('d', 'd'), 5): -12960,
    (('d4',), ('d', 'q'), 5): 7776,
    (('d4',), ('d', 't', 't'), 5): 3888,
    (('d4',), ('d3', 't'), 5): -54720,
    (('d4',), ('d4',), 5): 604800,
    (('d4',), ('e3', 't'), 5): 7296,
    (('d4',), ('e4',), 5): -34560,
    (('d4',), ('l2d',), 5): -328320,
    (('d4',), ('l2le',), 5): -138240,
    (('d4',), ('lds',), 5): 43776,
    (('d4',), ('le3',), 5): -184320,
    (('d4',), ('llq',), 5): -103680,
    (('d4',), ('ltr3',), 5): 62208,
    (('d4',), ('m111', 't'), 5): 10944,
    (('d4',), ('m21', 't'), 5): 31104,
    (('d4',), ('pll',), 5): 21888,
    (('d4',), ('q', 'q'), 5): -1152,
    (('d4',), ('q', 't', 't'), 5): -1152,
    (('d4',), ('t', 't', 't', 't'), 5): -96,
    (('d4',), ('t', 'tr3'), 5): -3072,
    (('d4',), ('th4',), 5): 43776,
    (('d4',), ('tr4',), 5): -4608,
    (('e3', 't'), ('bow',), 5): 192,
    (('e3', 't'), ('d', 'd'), 5): -96,
    (('e3', 't'), ('d', 'q'), 5): 96,
    (('e3', 't'), ('d', 't', 't'), 5): 48,
    (('e3', 't'), ('d3', 't'), 5): -1536,
    (('e3', 't'), ('d4',), 5): 7296,
    (('e3', 't'), ('e3', 't'), 5): 416,
    (('e3', 't'), ('e4',), 5): -384,
    (('e3', 't'), ('l2d',), 5): -3264,
    (('e3', 't'), ('l2le',), 5): -1536,
    (('e3', 't'), ('lds',), 5): 768,
    (('e3', 't'), ('le3',), 5): -2432,
    (('e3', 't'), ('llq',), 5): -1344,
    (('e3', 't'), ('ltr3',), 5): 384,
    (('e3', 't'), ('m111', 't'), 5): 96,
    (('e3', 't'), ('m21', 't'), 5): 1056,
    (('e3', 't'), ('pll',), 5): 192,
    (('e3', 't'), ('q', 't', 't'), 5): -48,
    (('e3', 't'), ('t', 'tr3'), 5): -96,
    (('e3', 't'), ('th4',), 5): 192,
    (('e4',), ('bow',), 5): -3744,
    (('e4',), ('d', 'd'), 5): 384,
    (('e4',), ('d', 'q'), 5): -576,
    (('e4',), ('d3', 't'), 5): 768,
    (('e4',), ('d4',), 5): -34560,
    (('e4',), ('e3', 't'), 5): -384,
    (('e4',), ('e4',), 5): 4416,
    (('e4',), ('l2d',), 5): 21120,
    (('e4',), ('l2le',), 5): 3840,
    (('e4',), ('lds',), 5): -2688,
    (('e4',), ('le3',), 5): 14592,
    (('e4',), ('llq',), 5): 3840,
    (('e4',), ('ltr3',), 5): -3072,
    (('e4',), ('m21', 't'), 5): -384,
    (('e4',), ('pll',), 5): -384,
    (('e4',), ('q', 'q'), 5): 192,
    (('e4',), ('th4',), 5): -3840,
    (('e4',), ('tr4',), 5): 384,
    (('l2d',), ('bow',), 5): -22080,
    (('l2d',), ('d', 'd'), 5): 5856,
    (('l2d',), ('d', 'q'), 5): -4896,
    (('l2d',), ('d', 't', 't'), 5): -912,
    (('l2d',), ('d3', 't'), 5): 21504,
    (('l2d',), ('d4',), 5): -328320,
    (('l2d',), ('e3', 't'), 5): -3264,
    (('l2d',), ('e4',), 5): 21120,
    (('l2d',), ('l2d',), 5): 200256,
    (('l2d',), ('l2le',), 5): 67200,
    (('l2d',), ('lds',), 5): -25536,
    (('l2d',), ('le3',), 5): 105600,
    (('l2d',), ('llq',), 5): 55104,
    (('l2d',), ('ltr3',), 5): -41664,
    (('l2d',), ('m111', 't'), 5): -3648,
    (('l2d',), ('m21', 't'), 5): -14688,
    (('l2d',), ('pll',), 5): -11520,
    (('l2d',), ('q', 'q'), 5): 960,
    (('l2d',), ('q', 't', 't'), 5): 480,
    (('l2d',), ('t', 'tr3'), 5): 1920,
    (('l2d',), ('th4',), 5): -28032,
    (('l2d',), ('tr4',), 5): 3840,
    (('l2le',), ('bow',), 5): -4224,
    (('l2le',), ('d', 'd'), 5): 4992,
    (('l2le',), ('d', 'q'), 5): -2112,
    (('l2le',), ('d', 't', 't'), 5): -1824,
    (('l2le',), ('d3', 't'), 5): 19200,
    (('l2le',), ('d4',), 5): -138240,
    (('l2le',), ('e3', 't'), 5): -1536,
    (('l2le',), ('e4',), 5): 3840,
    (('l2le',), ('l2d',), 5): 67200,
    (('l2le',), ('l2le',), 5): 46464,
    (('l2le',), ('lds',), 5): -10368,
    (('l2le',), ('le3',), 5): 28416,
    (('l2le',), ('llq',), 5): 25728,
    (('l2le',), ('ltr3',), 5): -12672,
    (('l2le',), ('m111', 't'), 5): -5184,
    (('l2le',), ('m21', 't'), 5): -9408,
    (('l2le',), ('pll',), 5): -8064,
    (('l2le',), ('q', 'q'), 5): 192,
    (('l2le',), ('q', 't', 't'), 5): 384,
    (('l2le',), ('t', 't', 't', 't'), 5): 48,
    (('l2le',), ('t', 'tr3'), 5): 768,
    (('l2le',), ('th4',), 5): -4608,
    (('l2le',), ('tr4',), 5): 768,
    (('lds',), ('bow',), 5): 2880,
    (('lds',), ('d', 'd'), 5): -1152,
    (('lds',), ('d', 'q'), 5): 1056,
    (('lds',), ('d', 't', 't'), 5): 96,
    (('lds',), ('d3', 't'), 5): -3264,
    (('lds',), ('d4',), 5): 43776,
    (('lds',), ('e3', 't'), 5): 768,
    (('lds',), ('e4',), 5): -2688,
    (('lds',), ('l2d',), 5): -25536,
    (('lds',), ('l2le',), 5): -10368,
    (('lds',), ('lds',), 5): 4416,
    (('lds',), ('le3',), 5): -13440,
    (('lds',), ('llq',), 5): -7104,
    (('lds',), ('ltr3',), 5): 4416,
    (('lds',), ('m111', 't'), 5): 384,
    (('lds',), ('m21', 't'), 5): 2208,
    (('lds',), ('pll',), 5): 1728,
    (('lds',), ('q', 'q'), 5): -192,
    (('lds',), ('q', 't', 't'), 5): -96,
    (('lds',), ('t', 'tr3'), 5): -192,
    (('lds',), ('th4',), 5): 2688,
    (('lds',), ('tr4',), 5): -384,
    (('le3',), ('bow',), 5): -11904,
    (('le3',), ('d', 'd'), 5): 1920,
    (('le3',), ('d', 'q'), 5): -1920,
    (('le3',), ('d', 't', 't'), 5): -192,
    (('le3',), ('d3', 't'), 5): 9600,
    (('le3',), ('d4',), 5): -184320,
    (('le3',), ('e3', 't'), 5): -2432,
    (('le3',), ('e4',), 5): 14592,
    (('le3',), ('l2d',), 5): 105600,
    (('le3',), ('l2le',), 5): 28416,
    (('le3',), ('lds',), 5): -13440,
    (('le3',), ('le3',), 5): 71424,
    (('le3',), ('llq',), 5): 29568,
    (('le3',), ('ltr3',), 5): -19584,
    (('le3',), ('m111', 't'), 5): -768,
    (('le3',), ('m21', 't'), 5): -6720,
    (('le3',), ('pll',), 5): -3840,
    (('le3',), ('q', 'q'), 5): 384,
    (('le3',), ('q', 't', 't'), 5): 192,
    (('le3',), ('t', 'tr3'), 5): 768,
    (('le3',), ('th4',), 5): -19200,
    (('le3',), ('tr4',), 5): 1536,
    (('llq',), ('bow',), 5): -3456,
    (('llq',), ('d', 'd'), 5): 1536,
    (('llq',), ('d', 'q'), 5): -672,
    (('llq',), ('d', 't', 't'), 5): -480,
    (('llq',), ('d3', 't'), 5): 10560,
    (('llq',), ('d4',), 5): -103680,
    (('llq',), ('e3', 't'), 5): -1344,
    (('llq',), ('e4',), 5): 3840,
    (('llq',), ('l2d',), 5): 55104,
    (('llq',), ('l2le',), 5): 25728,
    (('llq',), ('lds',), 5): -7104,
    (('llq',), ('le3',), 5): 29568,
    (('llq',), ('llq',), 5): 20544,
    (('llq',), ('ltr3',), 5): -12096,
    (('llq',), ('m111', 't'), 5): -2112,
    (('llq',), ('m21', 't'), 5): -6624,
    (('llq',), ('pll',), 5): -4416,
    (('llq',), ('q', 't', 't'), 5): 192,
    (('llq',), ('t', 'tr3'), 5): 768,
    (('llq',), ('th4',), 5): -6912,
    (('llq',), ('tr4',), 5): 768,
    (('ltr3',), ('bow',), 5): 3840,
    (('ltr3',), ('d', 'd'), 5): -384,
    (('ltr3',), ('d', 'q'), 5): 192,
    (('ltr3',), ('d3', 't'), 5): -3264,
    (('ltr3',), ('d4',), 5): 62208,
    (('ltr3',), ('e3', 't'), 5): 384,
    (('ltr3',), ('e4',), 5): -3072,
    (('ltr3',), ('l2d',), 5): -41664,
    (('ltr3',), ('l2le',), 5): -12672,
    (('ltr3',), ('lds',), 5): 4416,
    (('ltr3',), ('le3',), 5): -19584,
    (('ltr3',), ('llq',), 5): -12096,
    (('ltr3',), ('ltr3',), 5): 11328,
    (('ltr3',), ('m111', 't'), 5): 576,
    (('ltr3',), ('m21', 't'), 5): 2784,
    (('ltr3',), ('pll',), 5): 2688,
    (('ltr3',), ('t', 'tr3'), 5): -576,
    (('ltr3',), ('th4',), 5): 6144,
    (('ltr3',), ('tr4',), 5): -1152,
    (('m111', 't'), ('d', 'd'), 5): -624,
    (('m111', 't'), ('d', 'q'), 5): 96,
    (('m111', 't'), ('d', 't', 't'), 5): 552,
    (('m111', 't'), ('d3', 't'), 5): -3552,
    (('m111', 't'), ('d4',), 5): 10944,
    (('m111', 't'), ('e3', 't'), 5): 96,
    (('m111', 't'), ('l2d',), 5): -3648,
    (('m111', 't'), ('l2le',), 5): -5184,
    (('m111', 't'), ('lds',), 5): 384,
    (('m111', 't'), ('le3',), 5): -768,
    (('m111', 't'), ('llq',), 5): -2112,
    (('m111', 't'), ('ltr3',), 5): 576,
    (('m111', 't'), ('m111', 't'), 5): 1152,
    (('m111', 't'), ('m21', 't'), 5): 1440,
    (('m111', 't'), ('pll',), 5): 864,
    (('m111', 't'), ('q', 't', 't'), 5): -96,
    (('m111', 't'), ('t', 't', 't', 't'), 5): -24,
    (('m111', 't'), ('t', 'tr3'), 5): -96,
    (('m21', 't'), ('bow',), 5): 192,
    (('m21', 't'), ('d', 'd'), 5): -768,
    (('m21', 't'), ('d', 'q'), 5): 432,
    (('m21', 't'), ('d', 't', 't'), 5): 528,
    (('m21', 't'), ('d3', 't'), 5): -7776,
    (('m21', 't'), ('d4',), 5): 31104,
    (('m21', 't'), ('e3', 't'), 5): 1056,
    (('m21', 't'), ('e4',), 5): -384,
    (('m21', 't'), ('l2d',), 5): -14688,
    (('m21', 't'), ('l2le',), 5): -9408,
    (('m21', 't'), ('lds',), 5): 2208,
    (('m21', 't'), ('le3',), 5): -6720,
    (('m21', 't'), ('llq',), 5): -6624,
    (('m21', 't'), ('ltr3',), 5): 2784,
    (('m21', 't'), ('m111', 't'), 5): 1440,
    (('m21', 't'), ('m21', 't'), 5): 5136,
    (('m21', 't'), ('pll',), 5): 1632,
    (('m21', 't'), ('q', 't', 't'), 5): -288,
    (('m21', 't'), ('t', 'tr3'), 5): -576,
    (('m21', 't'), ('th4',), 5): 768,
    (('pll',), ('bow',), 5): 576,
    (('pll',), ('d', 'd'), 5): -672,
    (('pll',), ('d', 'q'), 5): 240,
    (('pll',), ('d', 't', 't'), 5): 192,
    (('pll',), ('d3', 't'), 5): -2880,
    (('pll',), ('d4',), 5): 21888,
    (('pll',), ('e3', 't'), 5): 192,
    (('pll',), ('e4',), 5): -384,
    (('pll',), ('l2d',), 5): -11520,
    (('pll',), ('l2le',), 5): -8064,
    (('pll',), ('lds',), 5): 1728,
    (('pll',), ('le3',), 5): -3840,
    (('pll',), ('llq',), 5): -4416,
    (('pll',), ('ltr3',), 5): 2688,
    (('pll',), ('m111', 't'), 5): 864,
    (('pll',), ('m21', 't'), 5): 1632,
    (('pll',), ('pll',), 5): 1632,
    (('pll',), ('q', 't', 't'), 5): -48,
    (('pll',), ('t', 'tr3'), 5): -192,
    (('pll',), ('th4',), 5): 576,
    (('pll',), ('tr4',), 5): -192,
    (('q', 'q'), ('bow',), 5): -288,
    (('q', 'q'), ('d', 'd'), 5): 96,
    (('q', 'q'), ('d', 'q'), 5): -144,
    (('q', 'q'), ('d4',), 5): -1152,
    (('q', 'q'), ('e4',), 5): 192,
    (('q', 'q'), ('l2d',), 5): 960,
    (('q', 'q'), ('l2le',), 5): 192,
    (('q', 'q'), ('lds',), 5): -192,
    (('q', 'q'), ('le3',), 5): 384,
    (('q', 'q'), ('q', 'q'), 5): 48,
    (('q', 'q'), ('th4',), 5): -96,
    (('q', 't', 't'), ('d', 'd'), 5): 96,
    (('q', 't', 't'), ('d', 'q'), 5): -72,
    (('q', 't', 't'), ('d', 't', 't'), 5): -72,
    (('q', 't', 't'), ('d3', 't'), 5): 480,
    (('q', 't', 't'), ('d4',), 5): -1152,
    (('q', 't', 't'), ('e3', 't'), 5): -48,
    (('q', 't', 't'), ('l2d',), 5): 480,
    (('q', 't', 't'), ('l2le',), 5): 384,
    (('q', 't', 't'), ('lds',), 5): -96,
    (('q', 't', 't'), ('le3',), 5): 192,
    (('q', 't', 't'), ('llq',), 5): 192,
    (('q', 't', 't'), ('m111', 't'), 5): -96,
    (('q', 't', 't'), ('m21', 't'), 5): -288,
    (('q', 't', 't'), ('pll',), 5): -48,
    (('q', 't', 't'), ('q', 't', 't'), 5): 48,
    (('t', 't', 't', 't'), ('d', 'd'), 5): 24,
    (('t', 't', 't', 't'), ('d', 't', 't'), 5): -36,
    (('t', 't', 't', 't'), ('d3', 't'), 5): 80,
    (('t', 't', 't', 't'), ('d4',), 5): -96,
    (('t', 't', 't', 't'), ('l2le',), 5): 48,
    (('t', 't', 't', 't'), ('m111', 't'), 5): -24,
    (('t', 't', 't', 't'), ('t', 't', 't', 't'), 5): 4,
    (('t', 'tr3'), ('d3', 't'), 5): 640,
    (('t', 'tr3'), ('d4',), 5): -3072,
    (('t', 'tr3'), ('e3', 't'), 5): -96,
    (('t', 'tr3'), ('l2d',), 5): 1920,
    (('t', 'tr3'), ('l2le',), 5): 768,
    (('t', 'tr3'), ('lds',), 5): -192,
    (('t', 'tr3'), ('le3',), 5): 768,
    (('t', 'tr3'), ('llq',), 5): 768,
    (('t', 'tr3'), ('ltr3',), 5): -576,
    (('t', 'tr3'), ('m111', 't'), 5): -96,
    (('t', 'tr3'), ('m21', 't'), 5): -576,
    (('t', 'tr3'), ('pll',), 5): -192,
    (('t', 'tr3'), ('t', 'tr3'), 5): 128,
    (('t', 'tr3'), ('th4',), 5): -192,
    (('th4',), ('bow',), 5): 3456,
    (('th4',), ('d', 'd'), 5): -192,
    (('th4',), ('d', 'q'), 5): 288,
    (('th4',), ('d3', 't'), 5): -768,
    (('th4',), ('d4',), 5): 43776,
    (('th4',), ('e3', 't'), 5): 192,
    (('th4',), ('e4',), 5): -3840,
    (('th4',), ('l2d',), 5): -28032,
    (('th4',), ('l2le',), 5): -4608,
    (('th4',), ('lds',), 5): 2688,
    (('th4',), ('le3',), 5): -19200,
    (('th4',), ('llq',), 5): -6912,
    (('th4',), ('ltr3',), 5): 6144,
    (('th4',), ('m21', 't'), 5): 768,
    (('th4',), ('pll',), 5): 576,
    (('th4',), ('q', 'q'), 5): -96,
    (('th4',), ('t', 'tr3'), 5): -192,
    (('th4',), ('th4',), 5): 6528,
    (('th4',), ('tr4',), 5): -576,
    (('tr4',), ('bow',), 5): -576,
    (('tr4',), ('d4',), 5): -4608,
    (('tr4',), ('e4',), 5): 384,
    (('tr4',), ('l2d',), 5): 3840,
    (('tr4',), ('l2le',), 5): 768,
    (('tr4',), ('lds',), 5): -384,
    (('tr4',), ('le3',), 5): 1536,
    (('tr4',), ('llq',), 5): 768,
    (('tr4',), ('ltr3',), 5): -1152,
    (('tr4',), ('pll',), 5): -192,
    (('tr4',), ('th4',), 5): -576,
    (('tr4',), ('tr4',), 5): 192,
    (('bow',), ('bow',), 6): 18480,
    (('bow',), ('d', 'd'), 6): -3648,
    (('bow',), ('d', 'q'), 6): 4032,
    (('bow',), ('d', 't', 't'), 6): 192,
    (('bow',), ('d3', 't'), 6): -8064,
    (('bow',), ('d4',), 6): 213120,
    (('bow',), ('e3', 't'), 6): 1920,
    (('bow',), ('e4',), 6): -17760,
    (('bow',), ('l2d',), 6): -136512,
    (('bow',), ('l2le',), 6): -35712,
    (('bow',), ('lds',), 6): 17856,
    (('bow',), ('le3',), 6): -77952,
    (('bow',), ('llq',), 6): -31872,
    (('bow',), ('ltr3',), 6): 26496,
    (('bow',), ('m111', 't'), 6): 768,
    (('bow',), ('m21', 't'), 6): 5952,
    (('bow',), ('pll',), 6): 5568,
    (('bow',), ('q', 'q'), 6): -1008,
    (('bow',), ('q', 't', 't'), 6): -192,
    (('bow',), ('t', 'tr3'), 6): -768,
    (('bow',), ('th4',), 6): 22080,
    (('bow',), ('tr4',), 6): -2784,
    (('d', 'd'), ('bow',), 6): -3648,
    (('d', 'd'), ('d', 'd'), 6): 4008,
    (('d', 'd'), ('d', 'q'), 6): -2184,
    (('d', 'd'), ('d', 't', 't'), 6): -1860,
    (('d', 'd'), ('d3', 't'), 6): 13392,
    (('d', 'd'), ('d4',), 6): -82080,
    (('d', 'd'), ('e3', 't'), 6): -1056,
    (('d', 'd'), ('e4',), 6): 3072,
    (('d', 'd'), ('l2d',), 6): 40608,
    (('d', 'd'), ('l2le',), 6): 26496,
    (('d', 'd'), ('lds',), 6): -6528,
    (('d', 'd'), ('le3',), 6): 17280,
    (('d', 'd'), ('llq',), 6): 13440,
    (('d', 'd'), ('ltr3',), 6): -6144,
    (('d', 'd'), ('m111', 't'), 6): -3408,
    (('d', 'd'), ('m21', 't'), 6): -6144,
    (('d', 'd'), ('pll',), 6): -4128,
    (('d', 'd'), ('q', 'q'), 6): 336,
    (('d', 'd'), ('q', 't', 't'), 6): 432,
    (('d', 'd'), ('t', 't', 't', 't'), 6): 84,
    (('d', 'd'), ('t', 'tr3'), 6): 384,
    (('d', 'd'), ('th4',), 6): -2880,
    (('d', 'd'), ('tr4',), 6): 384,
    (('d', 'q'), ('bow',), 6): 4032,
    (('d', 'q'), ('d', 'd'), 6): -2184,
    (('d', 'q'), ('d', 'q'), 6): 1848,
    (('d', 'q'), ('d', 't', 't'), 6): 516,
    (('d', 'q'), ('d3', 't'), 6): -5328,
    (('d', 'q'), ('d4',), 6): 53280,
    (('d', 'q'), ('e3', 't'), 6): 768,
    (('d', 'q'), ('e4',), 6): -3456,
    (('d', 'q'), ('l2d',), 6): -30816,
    (('d', 'q'), ('l2le',), 6): -13440,
    (('d', 'q'), ('lds',), 6): 5184,
    (('d', 'q'), ('le3',), 6): -14976,
    (('d', 'q'), ('llq',), 6): -7680,
    (('d', 'q'), ('ltr3',), 6): 4416,
    (('d', 'q'), ('m111', 't'), 6): 1008,
    (('d', 'q'), ('m21', 't'), 6): 2976,
    (('d', 'q'), ('pll',), 6): 2016,
    (('d', 'q'), ('q', 'q'), 6): -384,
    (('d', 'q'), ('q', 't', 't'), 6): -216,
    (('d', 'q'), ('t', 't', 't', 't'), 6): -12,
    (('d', 'q'), ('t', 'tr3'), 6): -192,
    (('d', 'q'), ('th4',), 6): 3072,
    (('d', 'q'), ('tr4',), 6): -384,
    (('d', 't', 't'), ('bow',), 6): 192,
    (('d', 't', 't'), ('d', 'd'), 6): -1860,
    (('d', 't', 't'), ('d', 'q'), 6): 516,
    (('d', 't', 't'), ('d', 't', 't'), 6): 1578,
    (('d', 't', 't'), ('d3', 't'), 6): -8712,
    (('d', 't', 't'), ('d4',), 6): 26640,
    (('d', 't', 't'), ('e3', 't'), 6): 432,
    (('d', 't', 't'), ('e4',), 6): -192,
    (('d', 't', 't'), ('l2d',), 6): -9360,
    (('d', 't', 't'), ('l2le',), 6): -11328,
    (('d', 't', 't'), ('lds',), 6): 1344,
    (('d', 't', 't'), ('le3',), 6): -2880,
    (('d', 't', 't'), ('llq',), 6): -4608,
    (('d', 't', 't'), ('ltr3',), 6): 1152,
    (('d', 't', 't'), ('m111', 't'), 6): 2472,
    (('d', 't', 't'), ('m21', 't'), 6): 3456,
    (('d', 't', 't'), ('pll',), 6): 1680,
    (('d', 't', 't'), ('q', 'q'), 6): -24,
    (('d', 't', 't'), ('q', 't', 't'), 6): -288,
    (('d', 't', 't'), ('t', 't', 't', 't'), 6): -90,
    (('d', 't', 't'), ('t', 'tr3'), 6): -192,
    (('d', 't', 't'), ('th4',), 6): 96,
    (('d3', 't'), ('bow',), 6): -8064,
    (('d3', 't'), ('d', 'd'), 6): 13392,
    (('d3', 't'), ('d', 'q'), 6): -5328,
    (('d3', 't'), ('d', 't', 't'), 6): -8712,
    (('d3', 't'), ('d3', 't'), 6): 74592,
    (('d3', 't'), ('d4',), 6): -360000,
    (('d3', 't'), ('e3', 't'), 6): -7296,
    (('d3', 't'), ('e4',), 6): 9216,
    (('d3', 't'), ('l2d',), 6): 165888,
    (('d3', 't'), ('l2le',), 6): 116352,
    (('d3', 't'), ('lds',), 6): -24768,
    (('d3', 't'), ('le3',), 6): 75648,
    (('d3', 't'), ('llq',), 6): 67392,
    (('d3', 't'), ('ltr3',), 6): -29376,
    (('d3', 't'), ('m111', 't'), 6): -17568,
    (('d3', 't'), ('m21', 't'), 6): -38880,
    (('d3', 't'), ('pll',), 6): -19008,
    (('d3', 't'), ('q', 'q'), 6): 288,
    (('d3', 't'), ('q', 't', 't'), 6): 2304,
    (('d3', 't'), ('t', 't', 't', 't'), 6): 360,
    (('d3', 't'), ('t', 'tr3'), 6): 3456,
    (('d3', 't'), ('th4',), 6): -11520,
    (('d3', 't'), ('tr4',), 6): 1152,
    (('d4',), ('bow',), 6): 213120,
    (('d4',), ('d', 'd'), 6): -82080,
    (('d4',), ('d', 'q'), 6): 53280,
    (('d4',), ('d', 't', 't'), 6): 26640,
    (('d4',), ('d3', 't'), 6): -360000,
    (('d4',), ('d4',), 6): 3830400,
    (('d4',), ('e3', 't'), 6): 48000,
    (('d4',), ('e4',), 6): -218880,
    (('d4',), ('l2d',), 6): -2160000,
    (('d4',), ('l2le',), 6): -875520,
    (('d4',), ('lds',), 6): 288000,
    (('d4',), ('le3',), 6): -1167360,
    (('d4',), ('llq',), 6): -656640,
    (('d4',), ('ltr3',), 6): 426240,
    (('d4',), ('m111', 't'), 6): 72000,
    (('d4',), ('m21', 't'), 6): 213120,
    (('d4',), ('pll',), 6): 144000,
    (('d4',), ('q', 'q'), 6): -8640,
    (('d4',), ('q', 't', 't'), 6): -8640,
    (('d4',), ('t', 't', 't', 't'), 6): -720,
    (('d4',), ('t', 'tr3'), 6): -23040,
    (('d4',), ('th4',), 6): 288000,
    (('d4',), ('tr4',), 6): -34560,
    (('e3', 't'), ('bow',), 6): 1920,
    (('e3', 't'), ('d', 'd'), 6): -1056,
    (('e3', 't'), ('d', 'q'), 6): 768,
    (('e3', 't'), ('d', 't', 't'), 6): 432,
    (('e3', 't'), ('d3', 't'), 6): -7296,
    (('e3', 't'), ('d4',), 6): 48000,
    (('e3', 't'), ('e3', 't'), 6): 1184,
    (('e3', 't'), ('e4',), 6): -2304,
    (('e3', 't'), ('l2d',), 6): -24768,
    (('e3', 't'), ('l2le',), 6): -11904,
    (('e3', 't'), ('lds',), 6): 3840,
    (('e3', 't'), ('le3',), 6): -13696,
    (('e3', 't'), ('llq',), 6): -8640,
    (('e3', 't'), ('ltr3',), 6): 4224,
    (('e3', 't'), ('m111', 't'), 6): 1248,
    (('e3', 't'), ('m21', 't'), 6): 4704,
    (('e3', 't'), ('pll',), 6): 1920,
    (('e3', 't'), ('q', 'q'), 6): -96,
    (('e3', 't'), ('q', 't', 't'), 6): -240,
    (('e3', 't'), ('t', 'tr3'), 6): -480,
    (('e3', 't'), ('th4',), 6): 2496,
    (('e3', 't'), ('tr4',), 6): -192,
    (('e4',), ('bow',), 6): -17760,
    (('e4',), ('d', 'd'), 6): 3072,
    (('e4',), ('d', 'q'), 6): -3456,
    (('e4',), ('d', 't', 't'), 6): -192,
    (('e4',), ('d3', 't'), 6): 9216,
    (('e4',), ('d4',), 6): -218880,
    (('e4',), ('e3', 't'), 6): -2304,
    (('e4',), ('e4',), 6): 18624,
    (('e4',), ('l2d',), 6): 134784,
    (('e4',), ('l2le',), 6): 34560,
    (('e4',), ('lds',), 6): -17280,
    (('e4',), ('le3',), 6): 82176,
    (('e4',), ('llq',), 6): 33024,
    (('e4',), ('ltr3',), 6): -25344,
    (('e4',), ('m111', 't'), 6): -768,
    (('e4',), ('m21', 't'), 6): -6528,
    (('e4',), ('pll',), 6): -4992,
    (('e4',), ('q', 'q'), 6): 864,
    (('e4',), ('q', 't', 't'), 6): 192,
    (('e4',), ('t', 'tr3'), 6): 768,
    (('e4',), ('th4',), 6): -22656,
    (('e4',), ('tr4',), 6): 2496,
    (('l2d',), ('bow',), 6): -136512,
    (('l2d',), ('d', 'd'), 6): 40608,
    (('l2d',), ('d', 'q'), 6): -30816,
    (('l2d',), ('d', 't', 't'), 6): -9360,
    (('l2d',), ('d3', 't'), 6): 165888,
    (('l2d',), ('d4',), 6): -2160000,
    (('l2d',), ('e3', 't'), 6): -24768,
    (('l2d',), ('e4',), 6): 134784,
    (('l2d',), ('l2d',), 6): 1276992,
    (('l2d',), ('l2le',), 6): 459648,
    (('l2d',), ('lds',), 6): -167616,
    (('l2d',), ('le3',), 6): 692352,
    (('l2d',), ('llq',), 6): 364608,
    (('l2d',), ('ltr3',), 6): -259776,
    (('l2d',), ('m111', 't'), 6): -30528,
    (('l2d',), ('m21', 't'), 6): -105696,
    (('l2d',), ('pll',), 6): -77184,
    (('l2d',), ('q', 'q'), 6): 5760,
    (('l2d',), ('q', 't', 't'), 6): 3744,
    (('l2d',), ('t', 't', 't', 't'), 6): 144,
    (('l2d',), ('t', 'tr3'), 6): 12672,
    (('l2d',), ('th4',), 6): -180864,
    (('l2d',), ('tr4',), 6): 23040,
    (('l2le',), ('bow',), 6): -35712,
    (('l2le',), ('d', 'd'), 6): 26496,
    (('l2le',), ('d', 'q'), 6): -13440,
    (('l2le',), ('d', 't', 't'), 6): -11328,
    (('l2le',), ('d3', 't'), 6): 116352,
    (('l2le',), ('d4',), 6): -875520,
    (('l2le',), ('e3', 't'), 6): -11904,
    (('l2le',), ('e4',), 6): 34560,
    (('l2le',), ('l2d',), 6): 459648,
    (('l2le',), ('l2le',), 6): 246528,
    (('l2le',), ('lds',), 6): -64896,
    (('l2le',), ('le3',), 6): 220416,
    (('l2le',), ('llq',), 6): 157824,
    (('l2le',), ('ltr3',), 6): -89472,
    (('l2le',), ('m111', 't'), 6): -26880,
    (('l2le',), ('m21', 't'), 6): -63168,
    (('l2le',), ('pll',), 6): -41472,
    (('l2le',), ('q', 'q'), 6): 1536,
    (('l2le',), ('q', 't', 't'), 6): 3072,
    (('l2le',), ('t', 't', 't', 't'), 6): 384,
    (('l2le',), ('t', 'tr3'), 6): 6144,
    (('l2le',), ('th4',), 6): -46848,
    (('l2le',), ('tr4',), 6): 6144,
    (('lds',), ('bow',), 6): 17856,
    (('lds',), ('d', 'd'), 6): -6528,
    (('lds',), ('d', 'q'), 6): 5184,
    (('lds',), ('d', 't', 't'), 6): 1344,
    (('lds',), ('d3', 't'), 6): -24768,
    (('lds',), ('d4',), 6): 288000,
    (('lds',), ('e3', 't'), 6): 3840,
    (('lds',), ('e4',), 6): -17280,
    (('lds',), ('l2d',), 6): -167616,
    (('lds',), ('l2le',), 6): -64896,
    (('lds',), ('lds',), 6): 23616,
    (('lds',), ('le3',), 6): -88704,
    (('lds',), ('llq',), 6): -48192,
    (('lds',), ('ltr3',), 6): 32064,
    (('lds',), ('m111', 't'), 6): 4416,
    (('lds',), ('m21', 't'), 6): 15840,
    (('lds',), ('pll',), 6): 10752,
    (('lds',), ('q', 'q'), 6): -960,
    (('lds',), ('q', 't', 't'), 6): -672,
    (('lds',), ('t', 'tr3'), 6): -1728,
    (('lds',), ('th4',), 6): 21504,
    (('lds',), ('tr4',), 6): -2688,
    (('le3',), ('bow',), 6): -77952,
    (('le3',), ('d', 'd'), 6): 17280,
    (('le3',), ('d', 'q'), 6): -14976,
    (('le3',), ('d', 't', 't'), 6): -2880,
    (('le3',), ('d3', 't'), 6): 75648,
    (('le3',), ('d4',), 6): -1167360,
    (('le3',), ('e3', 't'), 6): -13696,
    (('le3',), ('e4',), 6): 82176,
    (('le3',), ('l2d',), 6): 692352,
    (('le3',), ('l2le',), 6): 220416,
    (('le3',), ('lds',), 6): -88704,
    (('le3',), ('le3',), 6): 402176,
    (('le3',), ('llq',), 6): 192384,
    (('le3',), ('ltr3',), 6): -137856,
    (('le3',), ('m111', 't'), 6): -11520,
    (('le3',), ('m21', 't'), 6): -50496,
    (('le3',), ('pll',), 6): -35328,
    (('le3',), ('q', 'q'), 6): 3072,
    (('le3',), ('q', 't', 't'), 6): 1536,
    (('le3',), ('t', 'tr3'), 6): 6144,
    (('le3',), ('th4',), 6): -106752,
    (('le3',), ('tr4',), 6): 12288,
    (('llq',), ('bow',), 6): -31872,
    (('llq',), ('d', 'd'), 6): 13440,
    (('llq',), ('d', 'q'), 6): -7680,
    (('llq',), ('d', 't', 't'), 6): -4608,
    (('llq',), ('d3', 't'), 6): 67392,
    (('llq',), ('d4',), 6): -656640,
    (('llq',), ('e3', 't'), 6): -8640,
    (('llq',), ('e4',), 6): 33024,
    (('llq',), ('l2d',), 6): 364608,
    (('llq',), ('l2le',), 6): 157824,
    (('llq',), ('lds',), 6): -48192,
    (('llq',), ('le3',), 6): 192384,
    (('llq',), ('llq',), 6): 117696,
    (('llq',), ('ltr3',), 6): -75072,
    (('llq',), ('m111', 't'), 6): -13824,
    (('llq',), ('m21', 't'), 6): -40608,
    (('llq',), ('pll',), 6): -26880,
    (('llq',), ('q', 'q'), 6): 960,
    (('llq',), ('q', 't', 't'), 6): 1536,
    (('llq',), ('t', 't', 't', 't'), 6): 96,
    (('llq',), ('t', 'tr3'), 6): 4608,
    (('llq',), ('th4',), 6): -46464,
    (('llq',), ('tr4',), 6): 5760,
    (('ltr3',), ('bow',), 6): 26496,
    (('ltr3',), ('d', 'd'), 6): -6144,
    (('ltr3',), ('d', 'q'), 6): 4416,
    (('ltr3',), ('d', 't', 't'), 6): 1152,
    (('ltr3',), ('d3', 't'), 6): -29376,
    (('ltr3',), ('d4',), 6): 426240,
    (('ltr3',), ('e3', 't'), 6): 4224,
    (('ltr3',), ('e4',), 6): -25344,
    (('ltr3',), ('l2d',), 6): -259776,
    (('ltr3',), ('l2le',), 6): -89472,
    (('ltr3',), ('lds',), 6): 32064,
    (('ltr3',), ('le3',), 6): -137856,
    (('ltr3',), ('llq',), 6): -75072,
    (('ltr3',), ('ltr3',), 6): 58176,
    (('ltr3',), ('m111', 't'), 6): 5568,
    (('ltr3',), ('m21', 't'), 6): 20064,
    (('ltr3',), ('pll',), 6): 16128,
    (('ltr3',), ('q', 'q'), 6): -768,
    (('ltr3',), ('q', 't', 't'), 6): -480,
    (('ltr3',), ('t', 'tr3'), 6): -2880,
    (('ltr3',), ('th4',), 6): 38400,
    (('ltr3',), ('tr4',), 6): -5376,
    (('m111', 't'), ('bow',), 6): 768,
    (('m111', 't'), ('d', 'd'), 6): -3408,
    (('m111', 't'), ('d', 'q'), 6): 1008,
    (('m111', 't'), ('d', 't', 't'), 6): 2472,
    (('m111', 't'), ('d3', 't'), 6): -17568,
    (('m111', 't'), ('d4',), 6): 72000,
    (('m111', 't'), ('e3', 't'), 6): 1248,
    (('m111', 't'), ('e4',), 6): -768,
    (('m111', 't'), ('l2d',), 6): -30528,
    (('m111', 't'), ('l2le',), 6): -26880,
    (('m111', 't'), ('lds',), 6): 4416,
    (('m111', 't'), ('le3',), 6): -11520,
    (('m111', 't'), ('llq',), 6): -13824,
    (('m111', 't'), ('ltr3',), 6): 5568,
    (('m111', 't'), ('m111', 't'), 6): 4608,
    (('m111', 't'), ('m21', 't'), 6): 8256,
    (('m111', 't'), ('pll',), 6): 4416,
    (('m111', 't'), ('q', 't', 't'), 6): -528,
    (('m111', 't'), ('t', 't', 't', 't'), 6): -120,
    (('m111', 't'), ('t', 'tr3'), 6): -672,
    (('m111', 't'), ('th4',), 6): 1344,
    (('m111', 't'), ('tr4',), 6): -192,
    (('m21', 't'), ('bow',), 6): 5952,
    (('m21', 't'), ('d', 'd'), 6): -6144,
    (('m21', 't'), ('d', 'q'), 6): 2976,
    (('m21', 't'), ('d', 't', 't'), 6): 3456,
    (('m21', 't'), ('d3', 't'), 6): -38880,
    (('m21', 't'), ('d4',), 6): 213120,
    (('m21', 't'), ('e3', 't'), 6): 4704,
    (('m21', 't'), ('e4',), 6): -6528,
    (('m21', 't'), ('l2d',), 6): -105696,
    (('m21', 't'), ('l2le',), 6): -63168,
    (('m21', 't'), ('lds',), 6): 15840,
    (('m21', 't'), ('le3',), 6): -50496,
    (('m21', 't'), ('llq',), 6): -40608,
    (('m21', 't'), ('ltr3',), 6): 20064,
    (('m21', 't'), ('m111', 't'), 6): 8256,
    (('m21', 't'), ('m21', 't'), 6): 22704,
    (('m21', 't'), ('pll',), 6): 10752,
    (('m21', 't'), ('q', 'q'), 6): -192,
    (('m21', 't'), ('q', 't', 't'), 6): -1200,
    (('m21', 't'), ('t', 't', 't', 't'), 6): -96,
    (('m21', 't'), ('t', 'tr3'), 6): -2304,
    (('m21', 't'), ('th4',), 6): 8640,
    (('m21', 't'), ('tr4',), 6): -960,
    (('pll',), ('bow',), 6): 5568,
    (('pll',), ('d', 'd'), 6): -4128,
    (('pll',), ('d', 'q'), 6): 2016,
    (('pll',), ('d', 't', 't'), 6): 1680,
    (('pll',), ('d3', 't'), 6): -19008,
    (('pll',), ('d4',), 6): 144000,
    (('pll',), ('e3', 't'), 6): 1920,
    (('pll',), ('e4',), 6): -4992,
    (('pll',), ('l2d',), 6): -77184,
    (('pll',), ('l2le',), 6): -41472,
    (('pll',), ('lds',), 6): 10752,
    (('pll',), ('le3',), 6): -35328,
    (('pll',), ('llq',), 6): -26880,
    (('pll',), ('ltr3',), 6): 16128,
    (('pll',), ('m111', 't'), 6): 4416,
    (('pll',), ('m21', 't'), 6): 10752,
    (('pll',), ('pll',), 6): 7296,
    (('pll',), ('q', 'q'), 6): -192,
    (('pll',), ('q', 't', 't'), 6): -480,
    (('pll',), ('t', 't', 't', 't'), 6): -48,
    (('pll',), ('t', 'tr3'), 6): -1152,
    (('pll',), ('th4',), 6): 7680,
    (('pll',), ('tr4',), 6): -1152,
    (('q', 'q'), ('bow',), 6): -1008,
    (('q', 'q'), ('d', 'd'), 6): 336,
    (('q', 'q'), ('d', 'q'), 6): -384,
    (('q', 'q'), ('d', 't', 't'), 6): -24,
    (('q', 'q'), ('d3', 't'), 6): 288,
    (('q', 'q'), ('d4',), 6): -8640,
    (('q', 'q'), ('e3', 't'), 6): -96,
    (('q', 'q'), ('e4',), 6): 864,
    (('q', 'q'), ('l2d',), 6): 5760,
    (('q', 'q'), ('l2le',), 6): 1536,
    (('q', 'q'), ('lds',), 6): -960,
    (('q', 'q'), ('le3',), 6): 3072,
    (('q', 'q'), ('llq',), 6): 960,
    (('q', 'q'), ('ltr3',), 6): -768,
    (('q', 'q'), ('m21', 't'), 6): -192,
    (('q', 'q'), ('pll',), 6): -192,
    (('q', 'q'), ('q', 'q'), 6): 96,
    (('q', 'q'), ('q', 't', 't'), 6): 24,
    (('q', 'q'), ('th4',), 6): -768,
    (('q', 'q'), ('tr4',), 6): 96,
    (('q', 't', 't'), ('bow',), 6): -192,
    (('q', 't', 't'), ('d', 'd'), 6): 432,
    (('q', 't', 't'), ('d', 'q'), 6): -216,
    (('q', 't', 't'), ('d', 't', 't'), 6): -288,
    (('q', 't', 't'), ('d3', 't'), 6): 2304,
    (('q', 't', 't'), ('d4',), 6): -8640,
    (('q', 't', 't'), ('e3', 't'), 6): -240,
    (('q', 't', 't'), ('e4',), 6): 192,
    (('q', 't', 't'), ('l2d',), 6): 3744,
    (('q', 't', 't'), ('l2le',), 6): 3072,
    (('q', 't', 't'), ('lds',), 6): -672,
    (('q', 't', 't'), ('le3',), 6): 1536,
    (('q', 't', 't'), ('llq',), 6): 1536,
    (('q', 't', 't'), ('ltr3',), 6): -480,
    (('q', 't', 't'), ('m111', 't'), 6): -528,
    (('q', 't', 't'), ('m21', 't'), 6): -1200,
    (('q', 't', 't'), ('pll',), 6): -480,
    (('q', 't', 't'), ('q', 'q'), 6): 24,
    (('q', 't', 't'), ('q', 't', 't'), 6): 84,
    (('q', 't', 't'), ('t', 't', 't', 't'), 6): 12,
    (('q', 't', 't'), ('t', 'tr3'), 6): 96,
    (('q', 't', 't'), ('th4',), 6): -96,
    (('t', 't', 't', 't'), ('d', 'd'), 6): 84,
    (('t', 't', 't', 't'), ('d', 'q'), 6): -12,
    (('t', 't', 't', 't'), ('d', 't', 't'), 6): -90,
    (('t', 't', 't', 't'), ('d3', 't'), 6): 360,
    (('t', 't', 't', 't'), ('d4',), 6): -720,
    (('t', 't', 't', 't'), ('l2d',), 6): 144,
    (('t', 't', 't', 't'), ('l2le',), 6): 384,
    (('t', 't', 't', 't'), ('llq',), 6): 96,
    (('t', 't', 't', 't'), ('m111', 't'), 6): -120,
    (('t', 't', 't', 't'), ('m21', 't'), 6): -96,
    (('t', 't', 't', 't'), ('pll',), 6): -48,
    (('t', 't', 't', 't'), ('q', 't', 't'), 6): 12,
    (('t', 't', 't', 't'), ('t', 't', 't', 't'), 6): 6,
    (('t', 'tr3'), ('bow',), 6): -768,
    (('t', 'tr3'), ('d', 'd'), 6): 384,
    (('t', 'tr3'), ('d', 'q'), 6): -192,
    (('t', 'tr3'), ('d', 't', 't'), 6): -192,
    (('t', 'tr3'), ('d3', 't'), 6): 3456,
    (('t', 'tr3'), ('d4',), 6): -23040,
    (('t', 'tr3'), ('e3', 't'), 6): -480,
    (('t', 'tr3'), ('e4',), 6): 768,
    (('t', 'tr3'), ('l2d',), 6): 12672,
    (('t', 'tr3'), ('l2le',), 6): 6144,
    (('t', 'tr3'), ('lds',), 6): -1728,
    (('t', 'tr3'), ('le3',), 6): 6144,
    (('t', 'tr3'), ('llq',), 6): 4608,
    (('t', 'tr3'), ('ltr3',), 6): -2880,
    (('t', 'tr3'), ('m111', 't'), 6): -672,
    (('t', 'tr3'), ('m21', 't'), 6): -2304,
    (('t', 'tr3'), ('pll',), 6): -1152,
    (('t', 'tr3'), ('q', 't', 't'), 6): 96,
    (('t', 'tr3'), ('t', 'tr3'), 6): 288,
    (('t', 'tr3'), ('th4',), 6): -1344,
    (('t', 'tr3'), ('tr4',), 6): 192,
    (('th4',), ('bow',), 6): 22080,
    (('th4',), ('d', 'd'), 6): -2880,
    (('th4',), ('d', 'q'), 6): 3072,
    (('th4',), ('d', 't', 't'), 6): 96,
    (('th4',), ('d3', 't'), 6): -11520,
    (('th4',), ('d4',), 6): 288000,
    (('th4',), ('e3', 't'), 6): 2496,
    (('th4',), ('e4',), 6): -22656,
    (('th4',), ('l2d',), 6): -180864,
    (('th4',), ('l2le',), 6): -46848,
    (('th4',), ('lds',), 6): 21504,
    (('th4',), ('le3',), 6): -106752,
    (('th4',), ('llq',), 6): -46464,
    (('th4',), ('ltr3',), 6): 38400,
    (('th4',), ('m111', 't'), 6): 1344,
    (('th4',), ('m21', 't'), 6): 8640,
    (('th4',), ('pll',), 6): 7680,
    (('th4',), ('q', 'q'), 6): -768,
    (('th4',), ('q', 't', 't'), 6): -96,
    (('th4',), ('t', 'tr3'), 6): -1344,
    (('th4',), ('th4',), 6): 31104,
    (('th4',), ('tr4',), 6): -3840,
    (('tr4',), ('bow',), 6): -2784,
    (('tr4',), ('d', 'd'), 6): 384,
    (('tr4',), ('d', 'q'), 6): -384,
    (('tr4',), ('d3', 't'), 6): 1152,
    (('tr4',), ('d4',), 6): -34560,
    (('tr4',), ('e3', 't'), 6): -192,
    (('tr4',), ('e4',), 6): 2496,
    (('tr4',), ('l2d',), 6): 23040,
    (('tr4',), ('l2le',), 6): 6144,
    (('tr4',), ('lds',), 6): -2688,
    (('tr4',), ('le3',), 6): 12288,
    (('tr4',), ('llq',), 6): 5760,
    (('tr4',), ('ltr3',), 6): -5376,
    (('tr4',), ('m111', 't'), 6): -192,
    (('tr4',), ('m21', 't'), 6): -960,
    (('tr4',), ('pll',), 6): -1152,
    (('tr4',), ('q', 'q'), 6): 96,
    (('tr4',), ('t', 'tr3'), 6): 192,
    (('tr4',), ('th4',), 6): -3840,
    (('tr4',), ('tr4',), 6): 576,
    (('bow',), ('bow',), 7): 55296,
    (('bow',), ('d', 'd'), 7): -13824,
    (('bow',), ('d', 'q'), 7): 11520,
    (('bow',), ('d', 't', 't'), 7): 2304,
    (('bow',), ('d3', 't'), 7): -55296,
    (('bow',), ('d4',), 7): 829440,
    (('bow',), ('e3', 't'), 7): 9216,
    (('bow',), ('e4',), 7): -55296,
    (('bow',), ('l2d',), 7): -497664,
    (('bow',), ('l2le',), 7): -165888,
    (('bow',), ('lds',), 7): 64512,
    (('bow',), ('le3',), 7): -276480,
    (('bow',), ('llq',), 7): -138240,
    (('bow',), ('ltr3',), 7): 101376,
    (('bow',), ('m111', 't'), 7): 9216,
    (('bow',), ('m21', 't'), 7): 36864,
    (('bow',), ('pll',), 7): 27648,
    (('bow',), ('q', 'q'), 7): -2304,
    (('bow',), ('q', 't', 't'), 7): -1152,
    (('bow',), ('t', 'tr3'), 7): -4608,
    (('bow',), ('th4',), 7): 73728,
    (('bow',), ('tr4',), 7): -9216,
    (('d', 'd'), ('bow',), 7): -13824,
    (('d', 'd'), ('d', 'd'), 7): 8640,
    (('d', 'd'), ('d', 'q'), 7): -4608,
    (('d', 'd'), ('d', 't', 't'), 7): -4032,
    (('d', 'd'), ('d3', 't'), 7): 41472,
    (('d', 'd'), ('d4',), 7): -311040,
    (('d', 'd'), ('e3', 't'), 7): -4608,
    (('d', 'd'), ('e4',), 7): 13824,
    (('d', 'd'), ('l2d',), 7): 165888,
    (('d', 'd'), ('l2le',), 7): 82944,
    (('d', 'd'), ('lds',), 7): -23040,
    (('d', 'd'), ('le3',), 7): 82944,
    (('d', 'd'), ('llq',), 7): 55296,
    (('d', 'd'), ('ltr3',), 7): -32256,
    (('d', 'd'), ('m111', 't'), 7): -9216,
    (('d', 'd'), ('m21', 't'), 7): -23040,
    (('d', 'd'), ('pll',), 7): -13824,
    (('d', 'd'), ('q', 'q'), 7): 576,
    (('d', 'd'), ('q', 't', 't'), 7): 1152,
    (('d', 'd'), ('t', 't', 't', 't'), 7): 144,
    (('d', 'd'), ('t', 'tr3'), 7): 2304,
    (('d', 'd'), ('th4',), 7): -18432,
    (('d', 'd'), ('tr4',), 7): 2304,
    (('d', 'q'), ('bow',), 7): 11520,
    (('d', 'q'), ('d', 'd'), 7): -4608,
    (('d', 'q'), ('d', 'q'), 7): 2976,
    (('d', 'q'), ('d', 't', 't'), 7): 1632,
    (('d', 'q'), ('d3', 't'), 7): -20736,
    (('d', 'q'), ('d4',), 7): 207360,
    (('d', 'q'), ('e3', 't'), 7): 2688,
    (('d', 'q'), ('e4',), 7): -11520,
    (('d', 'q'), ('l2d',), 7): -117504,
    (('d', 'q'), ('l2le',), 7): -48384,
    (('d', 'q'), ('lds',), 7): 15744,
    (('d', 'q'), ('le3',), 7): -62208,
    (('d', 'q'), ('llq',), 7): -35712,
    (('d', 'q'), ('ltr3',), 7): 23424,
    (('d', 'q'), ('m111', 't'), 7): 4224,
    (('d', 'q'), ('m21', 't'), 7): 12288,
    (('d', 'q'), ('pll',), 7): 8064,
    (('d', 'q'), ('q', 'q'), 7): -480,
    (('d', 'q'), ('q', 't', 't'), 7): -528,
    (('d', 'q'), ('t', 't', 't', 't'), 7): -48,
    (('d', 'q'), ('t', 'tr3'), 7): -1344,
    (('d', 'q'), ('th4',), 7): 15360,
    (('d', 'q'), ('tr4',), 7): -1920,
    (('d', 't', 't'), ('bow',), 7): 2304,
    (('d', 't', 't'), ('d', 'd'), 7): -4032,
    (('d', 't', 't'), ('d', 'q'), 7): 1632,
    (('d', 't', 't'), ('d', 't', 't'), 7): 2400,
    (('d', 't', 't'), ('d3', 't'), 7): -20736,
    (('d', 't', 't'), ('d4',), 7): 103680,
    (('d', 't', 't'), ('e3', 't'), 7): 1920,
    (('d', 't', 't'), ('e4',), 7): -2304,
    (('d', 't', 't'), ('l2d',), 7): -48384,
    (('d', 't', 't'), ('l2le',), 7): -34560,
    (('d', 't', 't'), ('lds',), 7): 7296,
    (('d', 't', 't'), ('le3',), 7): -20736,
    (('d', 't', 't'), ('llq',), 7): -19584,
    (('d', 't', 't'), ('ltr3',), 7): 8832,
    (('d', 't', 't'), ('m111', 't'), 7): 4992,
    (('d', 't', 't'), ('m21', 't'), 7): 10752,
    (('d', 't', 't'), ('pll',), 7): 5760,
    (('d', 't', 't'), ('q', 'q'), 7): -96,
    (('d', 't', 't'), ('q', 't', 't'), 7): -624,
    (('d', 't', 't'), ('t', 't', 't', 't'), 7): -96,
    (('d', 't', 't'), ('t', 'tr3'), 7): -960,
    (('d', 't', 't'), ('th4',), 7): 3072,
    (('d', 't', 't'), ('tr4',), 7): -384,
    (('d3', 't'), ('bow',), 7): -55296,
    (('d3', 't'), ('d', 'd'), 7): 41472,
    (('d3', 't'), ('d', 'q'), 7): -20736,
    (('d3', 't'), ('d', 't', 't'), 7): -20736,
    (('d3', 't'), ('d3', 't'), 7): 202752,
    (('d3', 't'), ('d4',), 7): -1382400,
    (('d3', 't'), ('e3', 't'), 7): -21504,
    (('d3', 't'), ('e4',), 7): 55296,
    (('d3', 't'), ('l2d',), 7): 718848,
    (('d3', 't'), ('l2le',), 7): 387072,
    (('d3', 't'), ('lds',), 7): -101376,
    (('d3', 't'), ('le3',), 7): 350208,
    (('d3', 't'), ('llq',), 7): 248832,
    (('d3', 't'), ('ltr3',), 7): -138240,
    (('d3', 't'), ('m111', 't'), 7): -46080,
    (('d3', 't'), ('m21', 't'), 7): -110592,
    (('d3', 't'), ('pll',), 7): -64512,
    (('d3', 't'), ('q', 'q'), 7): 2304,
    (('d3', 't'), ('q', 't', 't'), 7): 5760,
    (('d3', 't'), ('t', 't', 't', 't'), 7): 768,
    (('d3', 't'), ('t', 'tr3'), 7): 10752,
    (('d3', 't'), ('th4',), 7): -73728,
    (('d3', 't'), ('tr4',), 7): 9216,
    (('d4',), ('bow',), 7): 829440,
    (('d4',), ('d', 'd'), 7): -311040,
    (('d4',), ('d', 'q'), 7): 207360,
    (('d4',), ('d', 't', 't'), 7): 103680,
    (('d4',), ('d3', 't'), 7): -1382400,
    (('d4',), ('d4',), 7): 14515200,
    (('d4',), ('e3', 't'), 7): 184320,
    (('d4',), ('e4',), 7): -829440,
    (('d4',), ('l2d',), 7): -8294400,
    (('d4',), ('l2le',), 7): -3317760,
    (('d4',), ('lds',), 7): 1105920,
    (('d4',), ('le3',), 7): -4423680,
    (('d4',), ('llq',), 7): -2488320,
    (('d4',), ('ltr3',), 7): 1658880,
    (('d4',), ('m111', 't'), 7): 276480,
    (('d4',), ('m21', 't'), 7): 829440,
    (('d4',), ('pll',), 7): 552960,
    (('d4',), ('q', 'q'), 7): -34560,
    (('d4',), ('q', 't', 't'), 7): -34560,
    (('d4',), ('t', 't', 't', 't'), 7): -2880,
    (('d4',), ('t', 'tr3'), 7): -92160,
    (('d4',), ('th4',), 7): 1105920,
    (('d4',), ('tr4',), 7): -138240,
    (('e3', 't'), ('bow',), 7): 9216,
    (('e3', 't'), ('d', 'd'), 7): -4608,
    (('e3', 't'), ('d', 'q'), 7): 2688,
    (('e3', 't'), ('d', 't', 't'), 7): 1920,
    (('e3', 't'), ('d3', 't'), 7): -21504,
    (('e3', 't'), ('d4',), 7): 184320,
    (('e3', 't'), ('e3', 't'), 7): 2560,
    (('e3', 't'), ('e4',), 7): -9216,
    (('e3', 't'), ('l2d',), 7): -101376,
    (('e3', 't'), ('l2le',), 7): -46080,
    (('e3', 't'), ('lds',), 7): 13824,
    (('e3', 't'), ('le3',), 7): -52224,
    (('e3', 't'), ('llq',), 7): -32256,
    (('e3', 't'), ('ltr3',), 7): 19968,
    (('e3', 't'), ('m111', 't'), 7): 4608,
    (('e3', 't'), ('m21', 't'), 7): 12288,
    (('e3', 't'), ('pll',), 7): 7680,
    (('e3', 't'), ('q', 'q'), 7): -384,
    (('e3', 't'), ('q', 't', 't'), 7): -576,
    (('e3', 't'), ('t', 't', 't', 't'), 7): -64,
    (('e3', 't'), ('t', 'tr3'), 7): -1280,
    (('e3', 't'), ('th4',), 7): 12288,
    (('e3', 't'), ('tr4',), 7): -1536,
    (('e4',), ('bow',), 7): -55296,
    (('e4',), ('d', 'd'), 7): 13824,
    (('e4',), ('d', 'q'), 7): -11520,
    (('e4',), ('d', 't', 't'), 7): -2304,
    (('e4',), ('d3', 't'), 7): 55296,
    (('e4',), ('d4',), 7): -829440,
    (('e4',), ('e3', 't'), 7): -9216,
    (('e4',), ('e4',), 7): 55296,
    (('e4',), ('l2d',), 7): 497664,
    (('e4',), ('l2le',), 7): 165888,
    (('e4',), ('lds',), 7): -64512,
    (('e4',), ('le3',), 7): 276480,
    (('e4',), ('llq',), 7): 138240,
    (('e4',), ('ltr3',), 7): -101376,
    (('e4',), ('m111', 't'), 7): -9216,
    (('e4',), ('m21', 't'), 7): -36864,
    (('e4',), ('pll',), 7): -27648,
    (('e4',), ('q', 'q'), 7): 2304,
    (('e4',), ('q', 't', 't'), 7): 1152,
    (('e4',), ('t', 'tr3'), 7): 4608,
    (('e4',), ('th4',), 7): -73728,
    (('e4',), ('tr4',), 7): 9216,
    (('l2d',), ('bow',), 7): -497664,
    (('l2d',), ('d', 'd'), 7): 165888,
    (('l2d',), ('d', 'q'), 7): -117504,
    (('l2d',), ('d', 't', 't'), 7): -48384,
    (('l2d',), ('d3', 't'), 7): 718848,
    (('l2d',), ('d4',), 7): -8294400,
    (('l2d',), ('e3', 't'), 7): -101376,
    (('l2d',), ('e4',), 7): 497664,
    (('l2d',), ('l2d',), 7): 4810752,
    (('l2d',), ('l2le',), 7): 1824768,
    (('l2d',), ('lds',), 7): -635904,
    (('l2d',), ('le3',), 7): 2598912,
    (('l2d',), ('llq',), 7): 1410048,
    (('l2d',), ('ltr3',), 7): -967680,
    (('l2d',), ('m111', 't'), 7): -138240,
    (('l2d',), ('m21', 't'), 7): -442368,
    (('l2d',), ('pll',), 7): -304128,
    (('l2d',), ('q', 'q'), 7): 20736,
    (('l2d',), ('q', 't', 't'), 7): 17280,
    (('l2d',), ('t', 't', 't', 't'), 7): 1152,
    (('l2d',), ('t', 'tr3'), 7): 50688,
    (('l2d',), ('th4',), 7): -663552,
    (('l2d',), ('tr4',), 7): 82944,
    (('l2le',), ('bow',), 7): -165888,
    (('l2le',), ('d', 'd'), 7): 82944,
    (('l2le',), ('d', 'q'), 7): -48384,
    (('l2le',), ('d', 't', 't'), 7): -34560,
    (('l2le',), ('d3', 't'), 7): 387072,
    (('l2le',), ('d4',), 7): -3317760,
    (('l2le',), ('e3', 't'), 7): -46080,
    (('l2le',), ('e4',), 7): 165888,
    (('l2le',), ('l2d',), 7): 1824768,
    (('l2le',), ('l2le',), 7): 829440,
    (('l2le',), ('lds',), 7): -248832,
    (('l2le',), ('le3',), 7): 940032,
    (('l2le',), ('llq',), 7): 580608,
    (('l2le',), ('ltr3',), 7): -359424,
    (('l2le',), ('m111', 't'), 7): -82944,
    (('l2le',), ('m21', 't'), 7): -221184,
    (('l2le',), ('pll',), 7): -138240,
    (('l2le',), ('q', 'q'), 7): 6912,
    (('l2le',), ('q', 't', 't'), 7): 10368,
    (('l2le',), ('t', 't', 't', 't'), 7): 1152,
    (('l2le',), ('t', 'tr3'), 7): 23040,
    (('l2le',), ('th4',), 7): -221184,
    (('l2le',), ('tr4',), 7): 27648,
    (('lds',), ('bow',), 7): 64512,
    (('lds',), ('d', 'd'), 7): -23040,
    (('lds',), ('d', 'q'), 7): 15744,
    (('lds',), ('d', 't', 't'), 7): 7296,
    (('lds',), ('d3', 't'), 7): -101376,
    (('lds',), ('d4',), 7): 1105920,
    (('lds',), ('e3', 't'), 7): 13824,
    (('lds',), ('e4',), 7): -64512,
    (('lds',), ('l2d',), 7): -635904,
    (('lds',), ('l2le',), 7): -248832,
    (('lds',), ('lds',), 7): 84480,
    (('lds',), ('le3',), 7): -340992,
    (('lds',), ('llq',), 7): -188928,
    (('lds',), ('ltr3',), 7): 127488,
    (('lds',), ('m111', 't'), 7): 19968,
    (('lds',), ('m21', 't'), 7): 61440,
    (('lds',), ('pll',), 7): 41472,
    (('lds',), ('q', 'q'), 7): -2688,
    (('lds',), ('q', 't', 't'), 7): -2496,
    (('lds',), ('t', 't', 't', 't'), 7): -192,
    (('lds',), ('t', 'tr3'), 7): -6912,
    (('lds',), ('th4',), 7): 86016,
    (('lds',), ('tr4',), 7): -10752,
    (('le3',), ('bow',), 7): -276480,
    (('le3',), ('d', 'd'), 7): 82944,
    (('le3',), ('d', 'q'), 7): -62208,
    (('le3',), ('d', 't', 't'), 7): -20736,
    (('le3',), ('d3', 't'), 7): 350208,
    (('le3',), ('d4',), 7): -4423680,
    (('le3',), ('e3', 't'), 7): -52224,
    (('le3',), ('e4',), 7): 276480,
    (('le3',), ('l2d',), 7): 2598912,
    (('le3',), ('l2le',), 7): 940032,
    (('le3',), ('lds',), 7): -340992,
    (('le3',), ('le3',), 7): 1419264,
    (('le3',), ('llq',), 7): 746496,
    (('le3',), ('ltr3',), 7): -525312,
    (('le3',), ('m111', 't'), 7): -64512,
    (('le3',), ('m21', 't'), 7): -221184,
    (('le3',), ('pll',), 7): -156672,
    (('le3',), ('q', 'q'), 7): 11520,
    (('le3',), ('q', 't', 't'), 7): 8064,
    (('le3',), ('t', 't', 't', 't'), 7): 384,
    (('le3',), ('t', 'tr3'), 7): 26112,
    (('le3',), ('th4',), 7): -368640,
    (('le3',), ('tr4',), 7): 46080,
    (('llq',), ('bow',), 7): -138240,
    (('llq',), ('d', 'd'), 7): 55296,
    (('llq',), ('d', 'q'), 7): -35712,
    (('llq',), ('d', 't', 't'), 7): -19584,
    (('llq',), ('d3', 't'), 7): 248832,
    (('llq',), ('d4',), 7): -2488320,
    (('llq',), ('e3', 't'), 7): -32256,
    (('llq',), ('e4',), 7): 138240,
    (('llq',), ('l2d',), 7): 1410048,
    (('llq',), ('l2le',), 7): 580608,
    (('llq',), ('lds',), 7): -188928,
    (('llq',), ('le3',), 7): 746496,
    (('llq',), ('llq',), 7): 428544,
    (('llq',), ('ltr3',), 7): -281088,
    (('llq',), ('m111', 't'), 7): -50688,
    (('llq',), ('m21', 't'), 7): -147456,
    (('llq',), ('pll',), 7): -96768,
    (('llq',), ('q', 'q'), 7): 5760,
    (('llq',), ('q', 't', 't'), 7): 6336,
    (('llq',), ('t', 't', 't', 't'), 7): 576,
    (('llq',), ('t', 'tr3'), 7): 16128,
    (('llq',), ('th4',), 7): -184320,
    (('llq',), ('tr4',), 7): 23040,
    (('ltr3',), ('bow',), 7): 101376,
    (('ltr3',), ('d', 'd'), 7): -32256,
    (('ltr3',), ('d', 'q'), 7): 23424,
    (('ltr3',), ('d', 't', 't'), 7): 8832,
    (('ltr3',), ('d3', 't'), 7): -138240,
    (('ltr3',), ('d4',), 7): 1658880,
    (('ltr3',), ('e3', 't'), 7): 19968,
    (('ltr3',), ('e4',), 7): -101376,
    (('ltr3',), ('l2d',), 7): -967680,
    (('ltr3',), ('l2le',), 7): -359424,
    (('ltr3',), ('lds',), 7): 127488,
    (('ltr3',), ('le3',), 7): -525312,
    (('ltr3',), ('llq',), 7): -281088,
    (('ltr3',), ('ltr3',), 7): 195072,
    (('ltr3',), ('m111', 't'), 7): 26112,
    (('ltr3',), ('m21', 't'), 7): 86016,
    (('ltr3',), ('pll',), 7): 59904,
    (('ltr3',), ('q', 'q'), 7): -4224,
    (('ltr3',), ('q', 't', 't'), 7): -3264,
    (('ltr3',), ('t', 't', 't', 't'), 7): -192,
    (('ltr3',), ('t', 'tr3'), 7): -9984,
    (('ltr3',), ('th4',), 7): 135168,
    (('ltr3',), ('tr4',), 7): -16896,
    (('m111', 't'), ('bow',), 7): 9216,
    (('m111', 't'), ('d', 'd'), 7): -9216,
    (('m111', 't'), ('d', 'q'), 7): 4224,
    (('m111', 't'), ('d', 't', 't'), 7): 4992,
    (('m111', 't'), ('d3', 't'), 7): -46080,
    (('m111', 't'), ('d4',), 7): 276480,
    (('m111', 't'), ('e3', 't'), 7): 4608,
    (('m111', 't'), ('e4',), 7): -9216,
    (('m111', 't'), ('l2d',), 7): -138240,
    (('m111', 't'), ('l2le',), 7): -82944,
    (('m111', 't'), ('lds',), 7): 19968,
    (('m111', 't'), ('le3',), 7): -64512,
    (('m111', 't'), ('llq',), 7): -50688,
    (('m111', 't'), ('ltr3',), 7): 26112,
    (('m111', 't'), ('m111', 't'), 7): 10752,
    (('m111', 't'), ('m21', 't'), 7): 24576,
    (('m111', 't'), ('pll',), 7): 13824,
    (('m111', 't'), ('q', 'q'), 7): -384,
    (('m111', 't'), ('q', 't', 't'), 7): -1344,
    (('m111', 't'), ('t', 't', 't', 't'), 7): -192,
    (('m111', 't'), ('t', 'tr3'), 7): -2304,
    (('m111', 't'), ('th4',), 7): 12288,
    (('m111', 't'), ('tr4',), 7): -1536,
    (('m21', 't'), ('bow',), 7): 36864,
    (('m21', 't'), ('d', 'd'), 7): -23040,
    (('m21', 't'), ('d', 'q'), 7): 12288,
    (('m21', 't'), ('d', 't', 't'), 7): 10752,
    (('m21', 't'), ('d3', 't'), 7): -110592,
    (('m21', 't'), ('d4',), 7): 829440,
    (('m21', 't'), ('e3', 't'), 7): 12288,
    (('m21', 't'), ('e4',), 7): -36864,
    (('m21', 't'), ('l2d',), 7): -442368,
    (('m21', 't'), ('l2le',), 7): -221184,
    (('m21', 't'), ('lds',), 7): 61440,
    (('m21', 't'), ('le3',), 7): -221184,
    (('m21', 't'), ('llq',), 7): -147456,
    (('m21', 't'), ('ltr3',), 7): 86016,
    (('m21', 't'), ('m111', 't'), 7): 24576,
    (('m21', 't'), ('m21', 't'), 7): 61440,
    (('m21', 't'), ('pll',), 7): 36864,
    (('m21', 't'), ('q', 'q'), 7): -1536,
    (('m21', 't'), ('q', 't', 't'), 7): -3072,
    (('m21', 't'), ('t', 't', 't', 't'), 7): -384,
    (('m21', 't'), ('t', 'tr3'), 7): -6144,
    (('m21', 't'), ('th4',), 7): 49152,
    (('m21', 't'), ('tr4',), 7): -6144,
    (('pll',), ('bow',), 7): 27648,
    (('pll',), ('d', 'd'), 7): -13824,
    (('pll',), ('d', 'q'), 7): 8064,
    (('pll',), ('d', 't', 't'), 7): 5760,
    (('pll',), ('d3', 't'), 7): -64512,
    (('pll',), ('d4',), 7): 552960,
    (('pll',), ('e3', 't'), 7): 7680,
    (('pll',), ('e4',), 7): -27648,
    (('pll',), ('l2d',), 7): -304128,
    (('pll',), ('l2le',), 7): -138240,
    (('pll',), ('lds',), 7): 41472,
    (('pll',), ('le3',), 7): -156672,
    (('pll',), ('llq',), 7): -96768,
    (('pll',), ('ltr3',), 7): 59904,
    (('pll',), ('m111', 't'), 7): 13824,
    (('pll',), ('m21', 't'), 7): 36864,
    (('pll',), ('pll',), 7): 23040,
    (('pll',), ('q', 'q'), 7): -1152,
    (('pll',), ('q', 't', 't'), 7): -1728,
    (('pll',), ('t', 't', 't', 't'), 7): -192,
    (('pll',), ('t', 'tr3'), 7): -3840,
    (('pll',), ('th4',), 7): 36864,
    (('pll',), ('tr4',), 7): -4608,
    (('q', 'q'), ('bow',), 7): -2304,
    (('q', 'q'), ('d', 'd'), 7): 576,
    (('q', 'q'), ('d', 'q'), 7): -480,
    (('q', 'q'), ('d', 't', 't'), 7): -96,
    (('q', 'q'), ('d3', 't'), 7): 2304,
    (('q', 'q'), ('d4',), 7): -34560,
    (('q', 'q'), ('e3', 't'), 7): -384,
    (('q', 'q'), ('e4',), 7): 2304,
    (('q', 'q'), ('l2d',), 7): 20736,
    (('q', 'q'), ('l2le',), 7): 6912,
    (('q', 'q'), ('lds',), 7): -2688,
    (('q', 'q'), ('le3',), 7): 11520,
    (('q', 'q'), ('llq',), 7): 5760,
    (('q', 'q'), ('ltr3',), 7): -4224,
    (('q', 'q'), ('m111', 't'), 7): -384,
    (('q', 'q'), ('m21', 't'), 7): -1536,
    (('q', 'q'), ('pll',), 7): -1152,
    (('q', 'q'), ('q', 'q'), 7): 96,
    (('q', 'q'), ('q', 't', 't'), 7): 48,
    (('q', 'q'), ('t', 'tr3'), 7): 192,
    (('q', 'q'), ('th4',), 7): -3072,
    (('q', 'q'), ('tr4',), 7): 384,
    (('q', 't', 't'), ('bow',), 7): -1152,
    (('q', 't', 't'), ('d', 'd'), 7): 1152,
    (('q', 't', 't'), ('d', 'q'), 7): -528,
    (('q', 't', 't'), ('d', 't', 't'), 7): -624,
    (('q', 't', 't'), ('d3', 't'), 7): 5760,
    (('q', 't', 't'), ('d4',), 7): -34560,
    (('q', 't', 't'), ('e3', 't'), 7): -576,
    (('q', 't', 't'), ('e4',), 7): 1152,
    (('q', 't', 't'), ('l2d',), 7): 17280,
    (('q', 't', 't'), ('l2le',), 7): 10368,
    (('q', 't', 't'), ('lds',), 7): -2496,
    (('q', 't', 't'), ('le3',), 7): 8064,
    (('q', 't', 't'), ('llq',), 7): 6336,
    (('q', 't', 't'), ('ltr3',), 7): -3264,
    (('q', 't', 't'), ('m111', 't'), 7): -1344,
    (('q', 't', 't'), ('m21', 't'), 7): -3072,
    (('q', 't', 't'), ('pll',), 7): -1728,
    (('q', 't', 't'), ('q', 'q'), 7): 48,
    (('q', 't', 't'), ('q', 't', 't'), 7): 168,
    (('q', 't', 't'), ('t', 't', 't', 't'), 7): 24,
    (('q', 't', 't'), ('t', 'tr3'), 7): 288,
    (('q', 't', 't'), ('th4',), 7): -1536,
    (('q', 't', 't'), ('tr4',), 7): 192,
    (('t', 't', 't', 't'), ('d', 'd'), 7): 144,
    (('t', 't', 't', 't'), ('d', 'q'), 7): -48,
    (('t', 't', 't', 't'), ('d', 't', 't'), 7): -96,
    (('t', 't', 't', 't'), ('d3', 't'), 7): 768,
    (('t', 't', 't', 't'), ('d4',), 7): -2880,
    (('t', 't', 't', 't'), ('e3', 't'), 7): -64,
    (('t', 't', 't', 't'), ('l2d',), 7): 1152,
    (('t', 't', 't', 't'), ('l2le',), 7): 1152,
    (('t', 't', 't', 't'), ('lds',), 7): -192,
    (('t', 't', 't', 't'), ('le3',), 7): 384,
    (('t', 't', 't', 't'), ('llq',), 7): 576,
    (('t', 't', 't', 't'), ('ltr3',), 7): -192,
    (('t', 't', 't', 't'), ('m111', 't'), 7): -192,
    (('t', 't', 't', 't'), ('m21', 't'), 7): -384,
    (('t', 't', 't', 't'), ('pll',), 7): -192,
    (('t', 't', 't', 't'), ('q', 't', 't'), 7): 24,
    (('t', 't', 't', 't'), ('t', 't', 't', 't'), 7): 4,
    (('t', 't', 't', 't'), ('t', 'tr3'), 7): 32,
    (('t', 'tr3'), ('bow',), 7): -4608,
    (('t', 'tr3'), ('d', 'd'), 7): 2304,
    (('t', 'tr3'), ('d', 'q'), 7): -1344,
    (('t', 'tr3'), ('d', 't', 't'), 7): -960,
    (('t', 'tr3'), ('d3', 't'), 7): 10752,
    (('t', 'tr3'), ('d4',), 7): -92160,
    (('t', 'tr3'), ('e3', 't'), 7): -1280,
    (('t', 'tr3'), ('e4',), 7): 4608,
    (('t', 'tr3'), ('l2d',), 7): 50688,
    (('t', 'tr3'), ('l2le',), 7): 23040,
    (('t', 'tr3'), ('lds',), 7): -6912,
    (('t', 'tr3'), ('le3',), 7): 26112,
    (('t', 'tr3'), ('llq',), 7): 16128,
    (('t', 'tr3'), ('ltr3',), 7): -9984,
    (('t', 'tr3'), ('m111', 't'), 7): -2304,
    (('t', 'tr3'), ('m21', 't'), 7): -6144,
    (('t', 'tr3'), ('pll',), 7): -3840,
    (('t', 'tr3'), ('q', 'q'), 7): 192,
    (('t', 'tr3'), ('q', 't', 't'), 7): 288,
    (('t', 'tr3'), ('t', 't', 't', 't'), 7): 32,
    (('t', 'tr3'), ('t', 'tr3'), 7): 640,
    (('t', 'tr3'), ('th4',), 7): -6144,
    (('t', 'tr3'), ('tr4',), 7): 768,
    (('th4',), ('bow',), 7): 73728,
    (('th4',), ('d', 'd'), 7): -18432,
    (('th4',), ('d', 'q'), 7): 15360,
    (('th4',), ('d', 't', 't'), 7): 3072,
    (('th4',), ('d3', 't'), 7): -73728,
    (('th4',), ('d4',), 7): 1105920,
    (('th4',), ('e3', 't'), 7): 12288,
    (('th4',), ('e4',), 7): -73728,
    (('th4',), ('l2d',), 7): -663552,
    (('th4',), ('l2le',), 7): -221184,
    (('th4',), ('lds',), 7): 86016,
    (('th4',), ('le3',), 7): -368640,
    (('th4',), ('llq',), 7): -184320,
    (('th4',), ('ltr3',), 7): 135168,
    (('th4',), ('m111', 't'), 7): 12288,
    (('th4',), ('m21', 't'), 7): 49152,
    (('th4',), ('pll',), 7): 36864,
    (('th4',), ('q', 'q'), 7): -3072,
    (('th4',), ('q', 't', 't'), 7): -1536,
    (('th4',), ('t', 'tr3'), 7): -6144,
    (('th4',), ('th4',), 7): 98304,
    (('th4',), ('tr4',), 7): -12288,
    (('tr4',), ('bow',), 7): -9216,
    (('tr4',), ('d', 'd'), 7): 2304,
    (('tr4',), ('d', 'q'), 7): -1920,
    (('tr4',), ('d', 't', 't'), 7): -384,
    (('tr4',), ('d3', 't'), 7): 9216,
    (('tr4',), ('d4',), 7): -138240,
    (('tr4',), ('e3', 't'), 7): -1536,
    (('tr4',), ('e4',), 7): 9216,
    (('tr4',), ('l2d',), 7): 82944,
    (('tr4',), ('l2le',), 7): 27648,
    (('tr4',), ('lds',), 7): -10752,
    (('tr4',), ('le3',), 7): 46080,
    (('tr4',), ('llq',), 7): 23040,
    (('tr4',), ('ltr3',), 7): -16896,
    (('tr4',), ('m111', 't'), 7): -1536,
    (('tr4',), ('m21', 't'), 7): -6144,
    (('tr4',), ('pll',), 7): -4608,
    (('tr4',), ('q', 'q'), 7): 384,
    (('tr4',), ('q', 't', 't'), 7): 192,
    (('tr4',), ('t', 'tr3'), 7): 768,
    (('tr4',), ('th4',), 7): -12288,
    (('tr4',), ('tr4',), 7): 1536,
    (('bow',), ('bow',), 8): 82944,
    (('bow',), ('d', 'd'), 8): -31104,
    (('bow',), ('d', 'q'), 8): 20736,
    (('bow',), ('d', 't', 't'), 8): 10368,
    (('bow',), ('d3', 't'), 8): -138240,
    (('bow',), ('d4',), 8): 1451520,
    (('bow',), ('e3', 't'), 8): 18432,
    (('bow',), ('e4',), 8): -82944,
    (('bow',), ('l2d',), 8): -829440,
    (('bow',), ('l2le',), 8): -331776,
    (('bow',), ('lds',), 8): 110592,
    (('bow',), ('le3',), 8): -442368,
    (('bow',), ('llq',), 8): -248832,
    (('bow',), ('ltr3',), 8): 165888,
    (('bow',), ('m111', 't'), 8): 27648,
    (('bow',), ('m21', 't'), 8): 82944,
    (('bow',), ('pll',), 8): 55296,
    (('bow',), ('q', 'q'), 8): -3456,
    (('bow',), ('q', 't', 't'), 8): -3456,
    (('bow',), ('t', 't', 't', 't'), 8): -288,
    (('bow',), ('t', 'tr3'), 8): -9216,
    (('bow',), ('th4',), 8): 110592,
    (('bow',), ('tr4',), 8): -13824,
    (('d', 'd'), ('bow',), 8): -31104,
    (('d', 'd'), ('d', 'd'), 8): 11664,
    (('d', 'd'), ('d', 'q'), 8): -7776,
    (('d', 'd'), ('d', 't', 't'), 8): -3888,
    (('d', 'd'), ('d3', 't'), 8): 51840,
    (('d', 'd'), ('d4',), 8): -544320,
    (('d', 'd'), ('e3', 't'), 8): -6912,
    (('d', 'd'), ('e4',), 8): 31104,
    (('d', 'd'), ('l2d',), 8): 311040,
    (('d', 'd'), ('l2le',), 8): 124416,
    (('d', 'd'), ('lds',), 8): -41472,
    (('d', 'd'), ('le3',), 8): 165888,
    (('d', 'd'), ('llq',), 8): 93312,
    (('d', 'd'), ('ltr3',), 8): -62208,
    (('d', 'd'), ('m111', 't'), 8): -10368,
    (('d', 'd'), ('m21', 't'), 8): -31104,
    (('d', 'd'), ('pll',), 8): -20736,
    (('d', 'd'), ('q', 'q'), 8): 1296,
    (('d', 'd'), ('q', 't', 't'), 8): 1296,
    (('d', 'd'), ('t', 't', 't', 't'), 8): 108,
    (('d', 'd'), ('t', 'tr3'), 8): 3456,
    (('d', 'd'), ('th4',), 8): -41472,
    (('d', 'd'), ('tr4',), 8): 5184,
    (('d', 'q'), ('bow',), 8): 20736,
    (('d', 'q'), ('d', 'd'), 8): -7776,
    (('d', 'q'), ('d', 'q'), 8): 5184,
    (('d', 'q'), ('d', 't', 't'), 8): 2592,
    (('d', 'q'), ('d3', 't'), 8): -34560,
    (('d', 'q'), ('d4',), 8): 362880,
    (('d', 'q'), ('e3', 't'), 8): 4608,
    (('d', 'q'), ('e4',), 8): -20736,
    (('d', 'q'), ('l2d',), 8): -207360,
    (('d', 'q'), ('l2le',), 8): -82944,
    (('d', 'q'), ('lds',), 8): 27648,
    (('d', 'q'), ('le3',), 8): -110592,
    (('d', 'q'), ('llq',), 8): -62208,
    (('d', 'q'), ('ltr3',), 8): 41472,
    (('d', 'q'), ('m111', 't'), 8): 6912,
    (('d', 'q'), ('m21', 't'), 8): 20736,
    (('d', 'q'), ('pll',), 8): 13824,
    (('d', 'q'), ('q', 'q'), 8): -864,
    (('d', 'q'), ('q', 't', 't'), 8): -864,
    (('d', 'q'), ('t', 't', 't', 't'), 8): -72,
    (('d', 'q'), ('t', 'tr3'), 8): -2304,
    (('d', 'q'), ('th4',), 8): 27648,
    (('d', 'q'), ('tr4',), 8): -3456,
    (('d', 't', 't'), ('bow',), 8): 10368,
    (('d', 't', 't'), ('d', 'd'), 8): -3888,
    (('d', 't', 't'), ('d', 'q'), 8): 2592,
    (('d', 't', 't'), ('d', 't', 't'), 8): 1296,
    (('d', 't', 't'), ('d3', 't'), 8): -17280,
    (('d', 't', 't'), ('d4',), 8): 181440,
    (('d', 't', 't'), ('e3', 't'), 8): 2304,
    (('d', 't', 't'), ('e4',), 8): -10368,
    (('d', 't', 't'), ('l2d',), 8): -103680,
    (('d', 't', 't'), ('l2le',), 8): -41472,
    (('d', 't', 't'), ('lds',), 8): 13824,
    (('d', 't', 't'), ('le3',), 8): -55296,
    (('d', 't', 't'), ('llq',), 8): -31104,
    (('d', 't', 't'), ('ltr3',), 8): 20736,
    (('d', 't', 't'), ('m111', 't'), 8): 3456,
    (('d', 't', 't'), ('m21', 't'), 8): 10368,
    (('d', 't', 't'), ('pll',), 8): 6912,
    (('d', 't', 't'), ('q', 'q'), 8): -432,
    (('d', 't', 't'), ('q', 't', 't'), 8): -432,
    (('d', 't', 't'), ('t', 't', 't', 't'), 8): -36,
    (('d', 't', 't'), ('t', 'tr3'), 8): -1152,
    (('d', 't', 't'), ('th4',), 8): 13824,
    (('d', 't', 't'), ('tr4',), 8): -1728,
    (('d3', 't'), ('bow',), 8): -138240,
    (('d3', 't'), ('d', 'd'), 8): 51840,
    (('d3', 't'), ('d', 'q'), 8): -34560,
    (('d3', 't'), ('d', 't', 't'), 8): -17280,
    (('d3', 't'), ('d3', 't'), 8): 230400,
    (('d3', 't'), ('d4',), 8): -2419200,
    (('d3', 't'), ('e3', 't'), 8): -30720,
    (('d3', 't'), ('e4',), 8): 138240,
    (('d3', 't'), ('l2d',), 8): 1382400,
    (('d3', 't'), ('l2le',), 8): 552960,
    (('d3', 't'), ('lds',), 8): -184320,
    (('d3', 't'), ('le3',), 8): 737280,
    (('d3', 't'), ('llq',), 8): 414720,
    (('d3', 't'), ('ltr3',), 8): -276480,
    (('d3', 't'), ('m111', 't'), 8): -46080,
    (('d3', 't'), ('m21', 't'), 8): -138240,
    (('d3', 't'), ('pll',), 8): -92160,
    (('d3', 't'), ('q', 'q'), 8): 5760,
    (('d3', 't'), ('q', 't', 't'), 8): 5760,
    (('d3', 't'), ('t', 't', 't', 't'), 8): 480,
    (('d3', 't'), ('t', 'tr3'), 8): 15360,
    (('d3', 't'), ('th4',), 8): -184320,
    (('d3', 't'), ('tr4',), 8): 23040,
    (('d4',), ('bow',), 8): 1451520,
    (('d4',), ('d', 'd'), 8): -544320,
    (('d4',), ('d', 'q'), 8): 362880,
    (('d4',), ('d', 't', 't'), 8): 181440,
    (('d4',), ('d3', 't'), 8): -2419200,
    (('d4',), ('d4',), 8): 25401600,
    (('d4',), ('e3', 't'), 8): 322560,
    (('d4',), ('e4',), 8): -1451520,
    (('d4',), ('l2d',), 8): -14515200,
    (('d4',), ('l2le',), 8): -5806080,
    (('d4',), ('lds',), 8): 1935360,
    (('d4',), ('le3',), 8): -7741440,
    (('d4',), ('llq',), 8): -4354560,
    (('d4',), ('ltr3',), 8): 2903040,
    (('d4',), ('m111', 't'), 8): 483840,
    (('d4',), ('m21', 't'), 8): 1451520,
    (('d4',), ('pll',), 8): 967680,
    (('d4',), ('q', 'q'), 8): -60480,
    (('d4',), ('q', 't', 't'), 8): -60480,
    (('d4',), ('t', 't', 't', 't'), 8): -5040,
    (('d4',), ('t', 'tr3'), 8): -161280,
    (('d4',), ('th4',), 8): 1935360,
    (('d4',), ('tr4',), 8): -241920,
    (('e3', 't'), ('bow',), 8): 18432,
    (('e3', 't'), ('d', 'd'), 8): -6912,
    (('e3', 't'), ('d', 'q'), 8): 4608,
    (('e3', 't'), ('d', 't', 't'), 8): 2304,
    (('e3', 't'), ('d3', 't'), 8): -30720,
    (('e3', 't'), ('d4',), 8): 322560,
    (('e3', 't'), ('e3', 't'), 8): 4096,
    (('e3', 't'), ('e4',), 8): -18432,
    (('e3', 't'), ('l2d',), 8): -184320,
    (('e3', 't'), ('l2le',), 8): -73728,
    (('e3', 't'), ('lds',), 8): 24576,
    (('e3', 't'), ('le3',), 8): -98304,
    (('e3', 't'), ('llq',), 8): -55296,
    (('e3', 't'), ('ltr3',), 8): 36864,
    (('e3', 't'), ('m111', 't'), 8): 6144,
    (('e3', 't'), ('m21', 't'), 8): 18432,
    (('e3', 't'), ('pll',), 8): 12288,
    (('e3', 't'), ('q', 'q'), 8): -768,
    (('e3', 't'), ('q', 't', 't'), 8): -768,
    (('e3', 't'), ('t', 't', 't', 't'), 8): -64,
    (('e3', 't'), ('t', 'tr3'), 8): -2048,
    (('e3', 't'), ('th4',), 8): 24576,
    (('e3', 't'), ('tr4',), 8): -3072,
    (('e4',), ('bow',), 8): -82944,
    (('e4',), ('d', 'd'), 8): 31104,
    (('e4',), ('d', 'q'), 8): -20736,
    (('e4',), ('d', 't', 't'), 8): -10368,
    (('e4',), ('d3', 't'), 8): 138240,
    (('e4',), ('d4',), 8): -1451520,
    (('e4',), ('e3', 't'), 8): -18432,
    (('e4',), ('e4',), 8): 82944,
    (('e4',), ('l2d',), 8): 829440,
    (('e4',), ('l2le',), 8): 331776,
    (('e4',), ('lds',), 8): -110592,
    (('e4',), ('le3',), 8): 442368,
    (('e4',), ('llq',), 8): 248832,
    (('e4',), ('ltr3',), 8): -165888,
    (('e4',), ('m111', 't'), 8): -27648,
    (('e4',), ('m21', 't'), 8): -82944,
    (('e4',), ('pll',), 8): -55296,
    (('e4',), ('q', 'q'), 8): 3456,
    (('e4',), ('q', 't', 't'), 8): 3456,
    (('e4',), ('t', 't', 't', 't'), 8): 288,
    (('e4',), ('t', 'tr3'), 8): 9216,
    (('e4',), ('th4',), 8): -110592,
    (('e4',), ('tr4',), 8): 13824,
    (('l2d',), ('bow',), 8): -829440,
    (('l2d',), ('d', 'd'), 8): 311040,
    (('l2d',), ('d', 'q'), 8): -207360,
    (('l2d',), ('d', 't', 't'), 8): -103680,
    (('l2d',), ('d3', 't'), 8): 1382400,
    (('l2d',), ('d4',), 8): -14515200,
    (('l2d',), ('e3', 't'), 8): -184320,
    (('l2d',), ('e4',), 8): 829440,
    (('l2d',), ('l2d',), 8): 8294400,
    (('l2d',), ('l2le',), 8): 3317760,
    (('l2d',), ('lds',), 8): -1105920,
    (('l2d',), ('le3',), 8): 4423680,
    (('l2d',), ('llq',), 8): 2488320,
    (('l2d',), ('ltr3',), 8): -1658880,
    (('l2d',), ('m111', 't'), 8): -276480,
    (('l2d',), ('m21', 't'), 8): -829440,
    (('l2d',), ('pll',), 8): -552960,
    (('l2d',), ('q', 'q'), 8): 34560,
    (('l2d',), ('q', 't', 't'), 8): 34560,
    (('l2d',), ('t', 't', 't', 't'), 8): 2880,
    (('l2d',), ('t', 'tr3'), 8): 92160,
    (('l2d',), ('th4',), 8): -1105920,
    (('l2d',), ('tr4',), 8): 138240,
    (('l2le',), ('bow',), 8): -331776,
    (('l2le',), ('d', 'd'), 8): 124416,
    (('l2le',), ('d', 'q'), 8): -82944,
    (('l2le',), ('d', 't', 't'), 8): -41472,
    (('l2le',), ('d3', 't'), 8): 552960,
    (('l2le',), ('d4',), 8): -5806080,
    (('l2le',), ('e3', 't'), 8): -73728,
    (('l2le',), ('e4',), 8): 331776,
    (('l2le',), ('l2d',), 8): 3317760,
    (('l2le',), ('l2le',), 8): 1327104,
    (('l2le',), ('lds',), 8): -442368,
    (('l2le',), ('le3',), 8): 1769472,
    (('l2le',), ('llq',), 8): 995328,
    (('l2le',), ('ltr3',), 8): -663552,
    (('l2le',), ('m111', 't'), 8): -110592,
    (('l2le',), ('m21', 't'), 8): -331776,
    (('l2le',), ('pll',), 8): -221184,
    (('l2le',), ('q', 'q'), 8): 13824,
    (('l2le',), ('q', 't', 't'), 8): 13824,
    (('l2le',), ('t', 't', 't', 't'), 8): 1152,
    (('l2le',), ('t', 'tr3'), 8): 36864,
    (('l2le',), ('th4',), 8): -442368,
    (('l2le',), ('tr4',), 8): 55296,
    (('lds',), ('bow',), 8): 110592,
    (('lds',), ('d', 'd'), 8): -41472,
    (('lds',), ('d', 'q'), 8): 27648,
    (('lds',), ('d', 't', 't'), 8): 13824,
    (('lds',), ('d3', 't'), 8): -184320,
    (('lds',), ('d4',), 8): 1935360,
    (('lds',), ('e3', 't'), 8): 24576,
    (('lds',), ('e4',), 8): -110592,
    (('lds',), ('l2d',), 8): -1105920,
    (('lds',), ('l2le',), 8): -442368,
    (('lds',), ('lds',), 8): 147456,
    (('lds',), ('le3',), 8): -589824,
    (('lds',), ('llq',), 8): -331776,
    (('lds',), ('ltr3',), 8): 221184,
    (('lds',), ('m111', 't'), 8): 36864,
    (('lds',), ('m21', 't'), 8): 110592,
    (('lds',), ('pll',), 8): 73728,
    (('lds',), ('q', 'q'), 8): -4608,
    (('lds',), ('q', 't', 't'), 8): -4608,
    (('lds',), ('t', 't', 't', 't'), 8): -384,
    (('lds',), ('t', 'tr3'), 8): -12288,
    (('lds',), ('th4',), 8): 147456,
    (('lds',), ('tr4',), 8): -18432,
    (('le3',), ('bow',), 8): -442368,
    (('le3',), ('d', 'd'), 8): 165888,
    (('le3',), ('d', 'q'), 8): -110592,
    (('le3',), ('d', 't', 't'), 8): -55296,
    (('le3',), ('d3', 't'), 8): 737280,
    (('le3',), ('d4',), 8): -7741440,
    (('le3',), ('e3', 't'), 8): -98304,
    (('le3',), ('e4',), 8): 442368,
    (('le3',), ('l2d',), 8): 4423680,
    (('le3',), ('l2le',), 8): 1769472,
    (('le3',), ('lds',), 8): -589824,
    (('le3',), ('le3',), 8): 2359296,
    (('le3',), ('llq',), 8): 1327104,
    (('le3',), ('ltr3',), 8): -884736,
    (('le3',), ('m111', 't'), 8): -147456,
    (('le3',), ('m21', 't'), 8): -442368,
    (('le3',), ('pll',), 8): -294912,
    (('le3',), ('q', 'q'), 8): 18432,
    (('le3',), ('q', 't', 't'), 8): 18432,
    (('le3',), ('t', 't', 't', 't'), 8): 1536,
    (('le3',), ('t', 'tr3'), 8): 49152,
    (('le3',), ('th4',), 8): -589824,
    (('le3',), ('tr4',), 8): 73728,
    (('llq',), ('bow',), 8): -248832,
    (('llq',), ('d', 'd'), 8): 93312,
    (('llq',), ('d', 'q'), 8): -62208,
    (('llq',), ('d', 't', 't'), 8): -31104,
    (('llq',), ('d3', 't'), 8): 414720,
    (('llq',), ('d4',), 8): -4354560,
    (('llq',), ('e3', 't'), 8): -55296,
    (('llq',), ('e4',), 8): 248832,
    (('llq',), ('l2d',), 8): 2488320,
    (('llq',), ('l2le',), 8): 995328,
    (('llq',), ('lds',), 8): -331776,
    (('llq',), ('le3',), 8): 1327104,
    (('llq',), ('llq',), 8): 746496,
    (('llq',), ('ltr3',), 8): -497664,
    (('llq',), ('m111', 't'), 8): -82944,
    (('llq',), ('m21', 't'), 8): -248832,
    (('llq',), ('pll',), 8): -165888,
    (('llq',), ('q', 'q'), 8): 10368,
    (('llq',), ('q', 't', 't'), 8): 10368,
    (('llq',), ('t', 't', 't', 't'), 8): 864,
    (('llq',), ('t', 'tr3'), 8): 27648,
    (('llq',), ('th4',), 8): -331776,
    (('llq',), ('tr4',), 8): 41472,
    (('ltr3',), ('bow',), 8): 165888,
    (('ltr3',), ('d', 'd'), 8): -62208,
    (('ltr3',), ('d', 'q'), 8): 41472,
    (('ltr3',), ('d', 't', 't'), 8): 20736,
    (('ltr3',), ('d3', 't'), 8): -276480,
    (('ltr3',), ('d4',), 8): 2903040,
    (('ltr3',), ('e3', 't'), 8): 36864,
    (('ltr3',), ('e4',), 8): -165888,
    (('ltr3',), ('l2d',), 8): -1658880,
    (('ltr3',), ('l2le',), 8): -663552,
    (('ltr3',), ('lds',), 8): 221184,
    (('ltr3',), ('le3',), 8): -884736,
    (('ltr3',), ('llq',), 8): -497664,
    (('ltr3',), ('ltr3',), 8): 331776,
    (('ltr3',), ('m111', 't'), 8): 55296,
    (('ltr3',), ('m21', 't'), 8): 165888,
    (('ltr3',), ('pll',), 8): 110592,
    (('ltr3',), ('q', 'q'), 8): -6912,
    (('ltr3',), ('q', 't', 't'), 8): -6912,
    (('ltr3',), ('t', 't', 't', 't'), 8): -576,
    (('ltr3',), ('t', 'tr3'), 8): -18432,
    (('ltr3',), ('th4',), 8): 221184,
    (('ltr3',), ('tr4',), 8): -27648,
    (('m111', 't'), ('bow',), 8): 27648,
    (('m111', 't'), ('d', 'd'), 8): -10368,
    (('m111', 't'), ('d', 'q'), 8): 6912,
    (('m111', 't'), ('d', 't', 't'), 8): 3456,
    (('m111', 't'), ('d3', 't'), 8): -46080,
    (('m111', 't'), ('d4',), 8): 483840,
    (('m111', 't'), ('e3', 't'), 8): 6144,
    (('m111', 't'), ('e4',), 8): -27648,
    (('m111', 't'), ('l2d',), 8): -276480,
    (('m111', 't'), ('l2le',), 8): -110592,
    (('m111', 't'), ('lds',), 8): 36864,
    (('m111', 't'), ('le3',), 8): -147456,
    (('m111', 't'), ('llq',), 8): -82944,
    (('m111', 't'), ('ltr3',), 8): 55296,
    (('m111', 't'), ('m111', 't'), 8): 9216,
    (('m111', 't'), ('m21', 't'), 8): 27648,
    (('m111', 't'), ('pll',), 8): 18432,
    (('m111', 't'), ('q', 'q'), 8): -1152,
    (('m111', 't'), ('q', 't', 't'), 8): -1152,
    (('m111', 't'), ('t', 't', 't', 't'), 8): -96,
    (('m111', 't'), ('t', 'tr3'), 8): -3072,
    (('m111', 't'), ('th4',), 8): 36864,
    (('m111', 't'), ('tr4',), 8): -4608,
    (('m21', 't'), ('bow',), 8): 82944,
    (('m21', 't'), ('d', 'd'), 8): -31104,
    (('m21', 't'), ('d', 'q'), 8): 20736,
    (('m21', 't'), ('d', 't', 't'), 8): 10368,
    (('m21', 't'), ('d3', 't'), 8): -138240,
    (('m21', 't'), ('d4',), 8): 1451520,
    (('m21', 't'), ('e3', 't'), 8): 18432,
    (('m21', 't'), ('e4',), 8): -82944,
    (('m21', 't'), ('l2d',), 8): -829440,
    (('m21', 't'), ('l2le',), 8): -331776,
    (('m21', 't'), ('lds',), 8): 110592,
    (('m21', 't'), ('le3',), 8): -442368,
    (('m21', 't'), ('llq',), 8): -248832,
    (('m21', 't'), ('ltr3',), 8): 165888,
    (('m21', 't'), ('m111', 't'), 8): 27648,
    (('m21', 't'), ('m21', 't'), 8): 82944,
    (('m21', 't'), ('pll',), 8): 55296,
    (('m21', 't'), ('q', 'q'), 8): -3456,
    (('m21', 't'), ('q', 't', 't'), 8): -3456,
    (('m21', 't'), ('t', 't', 't', 't'), 8): -288,
    (('m21', 't'), ('t', 'tr3'), 8): -9216,
    (('m21', 't'), ('th4',), 8): 110592,
    (('m21', 't'), ('tr4',), 8): -13824,
    (('pll',), ('bow',), 8): 55296,
    (('pll',), ('d', 'd'), 8): -20736,
    (('pll',), ('d', 'q'), 8): 13824,
    (('pll',), ('d', 't', 't'), 8): 6912,
    (('pll',), ('d3', 't'), 8): -92160,
    (('pll',), ('d4',), 8): 967680,
    (('pll',), ('e3', 't'), 8): 12288,
    (('pll',), ('e4',), 8): -55296,
    (('pll',), ('l2d',), 8): -552960,
    (('pll',), ('l2le',), 8): -221184,
    (('pll',), ('lds',), 8): 73728,
    (('pll',), ('le3',), 8): -294912,
    (('pll',), ('llq',), 8): -165888,
    (('pll',), ('ltr3',), 8): 110592,
    (('pll',), ('m111', 't'), 8): 18432,
    (('pll',), ('m21', 't'), 8): 55296,
    (('pll',), ('pll',), 8): 36864,
    (('pll',), ('q', 'q'), 8): -2304,
    (('pll',), ('q', 't', 't'), 8): -2304,
    (('pll',), ('t', 't', 't', 't'), 8): -192,
    (('pll',), ('t', 'tr3'), 8): -6144,
    (('pll',), ('th4',), 8): 73728,
    (('pll',), ('tr4',), 8): -9216,
    (('q', 'q'), ('bow',), 8): -3456,
    (('q', 'q'), ('d', 'd'), 8): 1296,
    (('q', 'q'), ('d', 'q'), 8): -864,
    (('q', 'q'), ('d', 't', 't'), 8): -432,
    (('q', 'q'), ('d3', 't'), 8): 5760,
    (('q', 'q'), ('d4',), 8): -60480,
    (('q', 'q'), ('e3', 't'), 8): -768,
    (('q', 'q'), ('e4',), 8): 3456,
    (('q', 'q'), ('l2d',), 8): 34560,
    (('q', 'q'), ('l2le',), 8): 13824,
    (('q', 'q'), ('lds',), 8): -4608,
    (('q', 'q'), ('le3',), 8): 18432,
    (('q', 'q'), ('llq',), 8): 10368,
    (('q', 'q'), ('ltr3',), 8): -6912,
    (('q', 'q'), ('m111', 't'), 8): -1152,
    (('q', 'q'), ('m21', 't'), 8): -3456,
    (('q', 'q'), ('pll',), 8): -2304,
    (('q', 'q'), ('q', 'q'), 8): 144,
    (('q', 'q'), ('q', 't', 't'), 8): 144,
    (('q', 'q'), ('t', 't', 't', 't'), 8): 12,
    (('q', 'q'), ('t', 'tr3'), 8): 384,
    (('q', 'q'), ('th4',), 8): -4608,
    (('q', 'q'), ('tr4',), 8): 576,
    (('q', 't', 't'), ('bow',), 8): -3456,
    (('q', 't', 't'), ('d', 'd'), 8): 1296,
    (('q', 't', 't'), ('d', 'q'), 8): -864,
    (('q', 't', 't'), ('d', 't', 't'), 8): -432,
    (('q', 't', 't'), ('d3', 't'), 8): 5760,
    (('q', 't', 't'), ('d4',), 8): -60480,
    (('q', 't', 't'), ('e3', 't'), 8): -768,
    (('q', 't', 't'), ('e4',), 8): 3456,
    (('q', 't', 't'), ('l2d',), 8): 34560,
    (('q', 't', 't'), ('l2le',), 8): 13824,
    (('q', 't', 't'), ('lds',), 8): -4608,
    (('q', 't', 't'), ('le3',), 8): 18432,
    (('q', 't', 't'), ('llq',), 8): 10368,
    (('q', 't', 't'), ('ltr3',), 8): -6912,
    (('q', 't', 't'), ('m111', 't'), 8): -1152,
    (('q', 't', 't'), ('m21', 't'), 8): -3456,
    (('q', 't', 't'), ('pll',), 8): -2304,
    (('q', 't', 't'), ('q', 'q'), 8): 144,
    (('q', 't', 't'), ('q', 't', 't'), 8): 144,
    (('q', 't', 't'), ('t', 't', 't', 't'), 8): 12,
    (('q', 't', 't'), ('t', 'tr3'), 8): 384,
    (('q', 't', 't'), ('th4',), 8): -4608,
    (('q', 't', 't'), ('tr4',), 8): 576,
    (('t', 't', 't', 't'), ('bow',), 8): -288,
    (('t', 't', 't', 't'), ('d', 'd'), 8): 108,
    (('t', 't', 't', 't'), ('d', 'q'), 8): -72,
    (('t', 't', 't', 't'), ('d', 't', 't'), 8): -36,
    (('t', 't', 't', 't'), ('d3', 't'), 8): 480,
    (('t', 't', 't', 't'), ('d4',), 8): -5040,
    (('t', 't', 't', 't'), ('e3', 't'), 8): -64,
    (('t', 't', 't', 't'), ('e4',), 8): 288,
    (('t', 't', 't', 't'), ('l2d',), 8): 2880,
    (('t', 't', 't', 't'), ('l2le',), 8): 1152,
    (('t', 't', 't', 't'), ('lds',), 8): -384,
    (('t', 't', 't', 't'), ('le3',), 8): 1536,
    (('t', 't', 't', 't'), ('llq',), 8): 864,
    (('t', 't', 't', 't'), ('ltr3',), 8): -576,
    (('t', 't', 't', 't'), ('m111', 't'), 8): -96,
    (('t', 't', 't', 't'), ('m21', 't'), 8): -288,
    (('t', 't', 't', 't'), ('pll',), 8): -192,
    (('t', 't', 't', 't'), ('q', 'q'), 8): 12,
    (('t', 't', 't', 't'), ('q', 't', 't'), 8): 12,
    (('t', 't', 't', 't'), ('t', 't', 't', 't'), 8): 1,
    (('t', 't', 't', 't'), ('t', 'tr3'), 8): 32,
    (('t', 't', 't', 't'), ('th4',), 8): -384,
    (('t', 't', 't', 't'), ('tr4',), 8): 48,
    (('t', 'tr3'), ('bow',), 8): -9216,
    (('t', 'tr3'), ('d', 'd'), 8): 3456,
    (('t', 'tr3'), ('d', 'q'), 8): -2304,
    (('t', 'tr3'), ('d', 't', 't'), 8): -1152,
    (('t', 'tr3'), ('d3', 't'), 8): 15360,
    (('t', 'tr3'), ('d4',), 8): -161280,
    (('t', 'tr3'), ('e3', 't'), 8): -2048,
    (('t', 'tr3'), ('e4',), 8): 9216,
    (('t', 'tr3'), ('l2d',), 8): 92160,
    (('t', 'tr3'), ('l2le',), 8): 36864,
    (('t', 'tr3'), ('lds',), 8): -12288,
    (('t', 'tr3'), ('le3',), 8): 49152,
    (('t', 'tr3'), ('llq',), 8): 27648,
    (('t', 'tr3'), ('ltr3',), 8): -18432,
    (('t', 'tr3'), ('m111', 't'), 8): -3072,
    (('t', 'tr3'), ('m21', 't'), 8): -9216,
    (('t', 'tr3'), ('pll',), 8): -6144,
    (('t', 'tr3'), ('q', 'q'), 8): 384,
    (('t', 'tr3'), ('q', 't', 't'), 8): 384,
    (('t', 'tr3'), ('t', 't', 't', 't'), 8): 32,
    (('t', 'tr3'), ('t', 'tr3'), 8): 1024,
    (('t', 'tr3'), ('th4',), 8): -12288,
    (('t', 'tr3'), ('tr4',), 8): 1536,
    (('th4',), ('bow',), 8): 110592,
    (('th4',), ('d', 'd'), 8): -41472,
    (('th4',), ('d', 'q'), 8): 27648,
    (('th4',), ('d', 't', 't'), 8): 13824,
    (('th4',), ('d3', 't'), 8): -184320,
    (('th4',), ('d4',), 8): 1935360,
    (('th4',), ('e3', 't'), 8): 24576,
    (('th4',), ('e4',), 8): -110592,
    (('th4',), ('l2d',), 8): -1105920,
    (('th4',), ('l2le',), 8): -442368,
    (('th4',), ('lds',), 8): 147456,
    (('th4',), ('le3',), 8): -589824,
    (('th4',), ('llq',), 8): -331776,
    (('th4',), ('ltr3',), 8): 221184,
    (('th4',), ('m111', 't'), 8): 36864,
    (('th4',), ('m21', 't'), 8): 110592,
    (('th4',), ('pll',), 8): 73728,
    (('th4',), ('q', 'q'), 8): -4608,
    (('th4',), ('q', 't', 't'), 8): -4608,
    (('th4',), ('t', 't', 't', 't'), 8): -384,
    (('th4',), ('t', 'tr3'), 8): -12288,
    (('th4',), ('th4',), 8): 147456,
    (('th4',), ('tr4',), 8): -18432,
    (('tr4',), ('bow',), 8): -13824,
    (('tr4',), ('d', 'd'), 8): 5184,
    (('tr4',), ('d', 'q'), 8): -3456,
    (('tr4',), ('d', 't', 't'), 8): -1728,
    (('tr4',), ('d3', 't'), 8): 23040,
    (('tr4',), ('d4',), 8): -241920,
    (('tr4',), ('e3', 't'), 8): -3072,
    (('tr4',), ('e4',), 8): 13824,
    (('tr4',), ('l2d',), 8): 138240,
    (('tr4',), ('l2le',), 8): 55296,
    (('tr4',), ('lds',), 8): -18432,
    (('tr4',), ('le3',), 8): 73728,
    (('tr4',), ('llq',), 8): 41472,
    (('tr4',), ('ltr3',), 8): -27648,
    (('tr4',), ('m111', 't'), 8): -4608,
    (('tr4',), ('m21', 't'), 8): -13824,
    (('tr4',), ('pll',), 8): -9216,
    (('tr4',), ('q', 'q'), 8): 576,
    (('tr4',), ('q', 't', 't'), 8): 576,
    (('tr4',), ('t', 't', 't', 't'), 8): 48,
    (('tr4',), ('t', 'tr3'), 8): 1536,
    (('tr4',), ('th4',), 8): -18432,
    (('tr4',), ('tr4',), 8): 2304,
}
