# chowmaps test suite
