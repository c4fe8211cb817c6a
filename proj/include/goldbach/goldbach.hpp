#pragma once

#include "goldbach/caps.hpp"
#include "goldbach/diophantine.hpp"
#include "goldbach/error.hpp"
#include "goldbach/oracle.hpp"
#include "goldbach/partition.hpp"
#include "goldbach/sequences.hpp"
#include "goldbach/wilson.hpp"
