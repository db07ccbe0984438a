/* Compiled int64 kernels: batched integer dot products and max-plus table
 * convolution.  Both mirror the pure-Python implementations in pure.py and
 * raise OverflowError instead of ever wrapping around; callers fall back to
 * arbitrary-precision Python on overflow. */

#define PY_SSIZE_T_CLEAN
#include <Python.h>
#include <stdint.h>

#define MAXPLUS_MAX_DIMS 16
#define NEG_INF_SENTINEL (-(int64_t)1 << 62)

static int
check_len(Py_buffer *buf, Py_ssize_t want, const char *name)
{
    if (buf->len != want * (Py_ssize_t)sizeof(int64_t)) {
        PyErr_Format(PyExc_ValueError, "%s buffer has wrong size", name);
        return 0;
    }
    return 1;
}

/* imatmul_i64(a, b, out, k, r, g): out[i*g + j] = dot(a[i*r..], b[j*r..]) */
static PyObject *
imatmul_i64(PyObject *self, PyObject *args)
{
    Py_buffer a, b, out;
    Py_ssize_t k, r, g;
    if (!PyArg_ParseTuple(args, "y*y*w*nnn", &a, &b, &out, &k, &r, &g))
        return NULL;
    if (!check_len(&a, k * r, "a") || !check_len(&b, g * r, "b") ||
        !check_len(&out, k * g, "out"))
        goto fail;

    const int64_t *av = (const int64_t *)a.buf;
    const int64_t *bv = (const int64_t *)b.buf;
    int64_t *ov = (int64_t *)out.buf;

    int64_t maxa = 0, maxb = 0;
    for (Py_ssize_t i = 0; i < k * r; i++) {
        int64_t v = av[i] < 0 ? -av[i] : av[i];
        if (v > maxa) maxa = v;
    }
    for (Py_ssize_t i = 0; i < g * r; i++) {
        int64_t v = bv[i] < 0 ? -bv[i] : bv[i];
        if (v > maxb) maxb = v;
    }
    if (maxa > 0 && maxb > 0 &&
        (__int128)maxa * maxb * (r > 0 ? r : 1) > (__int128)INT64_MAX) {
        PyErr_SetString(PyExc_OverflowError, "dot products may exceed int64");
        goto fail;
    }

    Py_BEGIN_ALLOW_THREADS
    for (Py_ssize_t i = 0; i < k; i++) {
        const int64_t *arow = av + i * r;
        for (Py_ssize_t j = 0; j < g; j++) {
            const int64_t *brow = bv + j * r;
            int64_t acc = 0;
            for (Py_ssize_t t = 0; t < r; t++)
                acc += arow[t] * brow[t];
            ov[i * g + j] = acc;
        }
    }
    Py_END_ALLOW_THREADS

    PyBuffer_Release(&a);
    PyBuffer_Release(&b);
    PyBuffer_Release(&out);
    Py_RETURN_NONE;

fail:
    PyBuffer_Release(&a);
    PyBuffer_Release(&b);
    PyBuffer_Release(&out);
    return NULL;
}

static Py_ssize_t
shape_size(const int64_t *shape, Py_ssize_t ndim)
{
    Py_ssize_t size = 1;
    for (Py_ssize_t d = 0; d < ndim; d++)
        size *= (Py_ssize_t)shape[d];
    return size;
}

/* maxplus_i64(a, a_shape, b, b_shape, out_shape, out, back_a, back_b)
 *
 * out[ia + ib] = max(a[ia] + b[ib]) over componentwise index sums that stay
 * inside out_shape; NEG_INF_SENTINEL marks empty cells.  Ties prefer the
 * lexicographically smallest (back_a, back_b), like the sparse merge. */
static PyObject *
maxplus_i64(PyObject *self, PyObject *args)
{
    Py_buffer a, ash, b, bsh, osh, out, backa, backb;
    if (!PyArg_ParseTuple(args, "y*y*y*y*y*w*w*w*",
                          &a, &ash, &b, &bsh, &osh, &out, &backa, &backb))
        return NULL;

    Py_ssize_t ndim = ash.len / (Py_ssize_t)sizeof(int64_t);
    const int64_t *a_shape = (const int64_t *)ash.buf;
    const int64_t *b_shape = (const int64_t *)bsh.buf;
    const int64_t *o_shape = (const int64_t *)osh.buf;
    if (ndim > MAXPLUS_MAX_DIMS || ndim < 1 ||
        bsh.len != ash.len || osh.len != ash.len) {
        PyErr_SetString(PyExc_ValueError, "bad shape buffers");
        goto fail;
    }
    Py_ssize_t asize = shape_size(a_shape, ndim);
    Py_ssize_t bsize = shape_size(b_shape, ndim);
    Py_ssize_t osize = shape_size(o_shape, ndim);
    if (!check_len(&a, asize, "a") || !check_len(&b, bsize, "b") ||
        !check_len(&out, osize, "out") || !check_len(&backa, osize, "back_a") ||
        !check_len(&backb, osize, "back_b"))
        goto fail;

    const int64_t *av = (const int64_t *)a.buf;
    const int64_t *bv = (const int64_t *)b.buf;
    int64_t *ov = (int64_t *)out.buf;
    int64_t *ba = (int64_t *)backa.buf;
    int64_t *bb = (int64_t *)backb.buf;

    Py_BEGIN_ALLOW_THREADS
    int64_t o_stride[MAXPLUS_MAX_DIMS];
    o_stride[ndim - 1] = 1;
    for (Py_ssize_t d = ndim - 2; d >= 0; d--)
        o_stride[d] = o_stride[d + 1] * o_shape[d + 1];

    for (Py_ssize_t i = 0; i < osize; i++) {
        ov[i] = NEG_INF_SENTINEL;
        ba[i] = -1;
        bb[i] = -1;
    }

    int64_t aidx[MAXPLUS_MAX_DIMS], bidx[MAXPLUS_MAX_DIMS];
    for (Py_ssize_t fa = 0; fa < asize; fa++) {
        if (av[fa] == NEG_INF_SENTINEL)
            continue;
        Py_ssize_t rem = fa;
        for (Py_ssize_t d = ndim - 1; d >= 0; d--) {
            aidx[d] = rem % a_shape[d];
            rem /= a_shape[d];
        }
        for (Py_ssize_t fb = 0; fb < bsize; fb++) {
            if (bv[fb] == NEG_INF_SENTINEL)
                continue;
            rem = fb;
            Py_ssize_t fo = 0;
            int ok = 1;
            for (Py_ssize_t d = ndim - 1; d >= 0; d--) {
                bidx[d] = rem % b_shape[d];
                rem /= b_shape[d];
            }
            for (Py_ssize_t d = 0; d < ndim; d++) {
                int64_t s = aidx[d] + bidx[d];
                if (s >= o_shape[d]) { ok = 0; break; }
                fo += s * o_stride[d];
            }
            if (!ok)
                continue;
            int64_t val = av[fa] + bv[fb];
            if (val > ov[fo] ||
                (val == ov[fo] &&
                 (fa < ba[fo] || (fa == ba[fo] && fb < bb[fo])))) {
                ov[fo] = val;
                ba[fo] = fa;
                bb[fo] = fb;
            }
        }
    }
    Py_END_ALLOW_THREADS

    PyBuffer_Release(&a);
    PyBuffer_Release(&ash);
    PyBuffer_Release(&b);
    PyBuffer_Release(&bsh);
    PyBuffer_Release(&osh);
    PyBuffer_Release(&out);
    PyBuffer_Release(&backa);
    PyBuffer_Release(&backb);
    Py_RETURN_NONE;

fail:
    PyBuffer_Release(&a);
    PyBuffer_Release(&ash);
    PyBuffer_Release(&b);
    PyBuffer_Release(&bsh);
    PyBuffer_Release(&osh);
    PyBuffer_Release(&out);
    PyBuffer_Release(&backa);
    PyBuffer_Release(&backb);
    return NULL;
}

static PyMethodDef methods[] = {
    {"imatmul_i64", imatmul_i64, METH_VARARGS,
     "int64 A @ B^T into a preallocated buffer; raises OverflowError if unsafe"},
    {"maxplus_i64", maxplus_i64, METH_VARARGS,
     "int64 max-plus convolution of two dense multi-dimensional tables"},
    {NULL, NULL, 0, NULL},
};

static struct PyModuleDef module = {
    PyModuleDef_HEAD_INIT, "_core", "compiled integer kernels", -1, methods,
};

PyMODINIT_FUNC
PyInit__core(void)
{
    return PyModule_Create(&module);
}
