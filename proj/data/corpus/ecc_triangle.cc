CONSCHECK 1
PROBLEM edge-clique-cover
N 3
K 1
T 2
S 1 3
0 1
0 2
1 2
S 0 1
0 1
