# Fair die used by the worked examples.
space DIE
atoms 1 2 3 4 5 6
event two  = {2}
event even = {2,4,6}
event odd  = {1,3,5}
event lt4  = {1,2,3}
event lt5  = {1,2,3,4}
event five = {5}
measure uniform = 1 1 1 1 1 1
