CONSCHECK 1
PROBLEM two-coloring
N 2
T 2
S 1 1
0 1
S 0 1
0 1
