# cython: language_level=3
"""Compiled sequence-summation kernel.

Same contract as _pure.seq_tables / _pure.scaled_harmonics, with the
Bell ladder inlined.  Values are arbitrary-precision Python integers;
the speedup comes from C-typed loop indexing and removing per-element
call overhead in the innermost k loop.
"""

from math import factorial


def scaled_harmonics(a_n_max, a_m_max, a_d):
    cdef Py_ssize_t n_max = a_n_max
    cdef Py_ssize_t m_max = a_m_max
    cdef Py_ssize_t m, i
    # ** must see Python-object operands: C-int ** C-int lowers to a
    # double pow and silently truncates big values.
    cdef object dm, acc, ipow
    out = []
    for m in range(1, m_max + 1):
        dm = a_d ** m
        row = [0] * (n_max + 1)
        acc = 0
        for i in range(1, n_max + 1):
            ipow = (<object> i) ** m
            acc += dm // ipow
            row[i] = acc
        out.append(row)
    return out


def seq_tables(a_a, a_n_max, a_mu_max, a_d):
    cdef Py_ssize_t a = a_a
    cdef Py_ssize_t n_max = a_n_max
    cdef Py_ssize_t mu_max = a_mu_max
    cdef Py_ssize_t n, k, m, mu, j, i
    sh = scaled_harmonics(n_max, mu_max, a_d) if mu_max else []
    fac = [factorial(m - 1) for m in range(1, mu_max + 1)]
    cdef list sgn = [(1 if m % 2 == 0 else -1) for m in range(1, mu_max + 1)]
    am1 = a_a - 1
    binom_row = [[1] * (j + 1) for j in range(mu_max)]
    for j in range(1, mu_max):
        for i in range(1, j):
            binom_row[j][i] = binom_row[j - 1][i - 1] + binom_row[j - 1][i]
    q = []
    pnum = [[] for _ in range(mu_max)]
    rs = [0] * mu_max
    ys = [0] * (mu_max + 1)
    for n in range(n_max + 1):
        qn = 0
        acc = [0] * mu_max
        c = 1
        kf = 1
        for k in range(n + 1):
            if k:
                c = c * (n - k + 1) // k
                kf = kf * k
            w = c ** a * kf
            qn = qn + w
            if mu_max:
                for m in range(mu_max):
                    shm = sh[m]
                    rs[m] = fac[m] * (a * shm[n - k] + sgn[m] * am1 * shm[k])
                ys[0] = 1
                for j in range(1, mu_max + 1):
                    brow = binom_row[j - 1]
                    t = 0
                    for i in range(j):
                        t = t + brow[i] * rs[i] * ys[j - 1 - i]
                    ys[j] = t
                for mu in range(mu_max):
                    acc[mu] = acc[mu] + w * ys[mu + 1]
        q.append(qn)
        for mu in range(mu_max):
            pnum[mu].append(acc[mu])
    return q, pnum


def backend_name():
    return "native"
