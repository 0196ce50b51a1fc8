namespace cgt {}
