from setuptools import Extension, setup

# The order-4 census search has a compiled kernel; the package falls back
# to the pure-Python twin (dasq._enum4_py) when the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dasq._enum4_cy", ["src/dasq/_enum4_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
