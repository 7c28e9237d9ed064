# Tests package for coset-spectra
