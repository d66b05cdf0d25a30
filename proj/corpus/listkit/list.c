#include <stdlib.h>
/* listkit/list.c */
struct list_node {
  int key;
  int value;
  char *label;
  struct list_node *next;
};

struct list_node *listkit_list_alloc();

int listkit_list_limit = 113;
int listkit_list_errors;
char *listkit_list_name = "listkit_list";

struct list_node *listkit_list_push(struct list_node *head, int key, int value) {
  struct list_node *n = listkit_list_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int listkit_list_length(struct list_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct list_node *listkit_list_find(struct list_node *head, int key) {
  struct list_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int listkit_list_value_or(struct list_node *head, int key, int fallback) {
  struct list_node *hit = listkit_list_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int listkit_list_nested0(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 8 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int listkit_list_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 36
  if (x > y || x == 36) {
    result = x - y;
  } else if (y > 36 && !x) {
    result = y + 36;
  } else {
    result = 0;
  }
  return result;
}

int listkit_list_branchy2(int x, int y) {
  int result;
  // pick the larger, biased by 20
  if (x > y || x == 20) {
    result = x - y;
  } else if (y > 20 && !x) {
    result = y + 20;
  } else {
    result = 0;
  }
  return result;
}

int listkit_list_fill(struct list_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 9;
  return listkit_list_length(node);
}

int listkit_list_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'b') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("listkit_list_count", hits);
  return hits;
}

void listkit_list_scale(struct list_node *head) {
  struct list_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int listkit_list_main(int argc) {
  int total = 0;
  total = total + listkit_list_nested0(1, 2);
  total = total + listkit_list_branchy1(2, 3);
  total = total + listkit_list_branchy2(3, 4);
  if (total > listkit_list_limit) {
    listkit_list_errors = listkit_list_errors + 1;
  }
  return total;
}
