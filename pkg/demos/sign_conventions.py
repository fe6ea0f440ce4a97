"""Which sign convention for the orthogonal Richardson test fits the biorbital products."""
from charsheaves.richardson import calibrate

cal = calibrate(13)
for conv, ok, bad in cal.results:
    print(f"{conv.label():<28} {'fits N<=13' if ok else f'first fails at N={bad}'}")
print("chosen:", cal.chosen.label())
