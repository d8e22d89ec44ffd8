#include "ap/numeric.hpp"
