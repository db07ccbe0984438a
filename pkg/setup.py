from setuptools import Extension, setup

# The integer kernels (batched dot products, max-plus table merges) have a
# hand-written C implementation.  The build is optional: if no compiler is
# available the package falls back to the pure-Python kernels at import time.
setup(
    ext_modules=[
        Extension(
            "degseq._kernels._core",
            ["src/degseq/_kernels/_core.c"],
            extra_compile_args=["-O2"],
            optional=True,
        )
    ]
)
