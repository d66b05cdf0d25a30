#include <stdlib.h>
/* textproc/scan.c */
struct scan_node {
  int key;
  int value;
  char *label;
  struct scan_node *next;
};

struct scan_node *textproc_scan_alloc();

int textproc_scan_limit = 494;
int textproc_scan_errors;
char *textproc_scan_name = "textproc_scan";

struct scan_node *textproc_scan_push(struct scan_node *head, int key, int value) {
  struct scan_node *n = textproc_scan_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int textproc_scan_length(struct scan_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct scan_node *textproc_scan_find(struct scan_node *head, int key) {
  struct scan_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int textproc_scan_value_or(struct scan_node *head, int key, int fallback) {
  struct scan_node *hit = textproc_scan_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int textproc_scan_nested0(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 2 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int textproc_scan_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 14
  if (x > y || x == 14) {
    result = x - y;
  } else if (y > 14 && !x) {
    result = y + 14;
  } else {
    result = 0;
  }
  return result;
}

int textproc_scan_fill(struct scan_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 9;
  return textproc_scan_length(node);
}

int textproc_scan_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'a') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("textproc_scan_count", hits);
  return hits;
}

void textproc_scan_scale(struct scan_node *head) {
  struct scan_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 4;
    cur = cur->next;
  }
}

int textproc_scan_main(int argc) {
  int total = 0;
  total = total + textproc_scan_nested0(1, 2);
  total = total + textproc_scan_branchy1(2, 3);
  if (total > textproc_scan_limit) {
    textproc_scan_errors = textproc_scan_errors + 1;
  }
  return total;
}
